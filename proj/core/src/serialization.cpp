#include "qstore/serialization.hpp"

#include <cmath>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qstore {

namespace {

using nlohmann::json;

void write_text(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw WriteError("cannot open for writing: " + path.string());
  out << text;
  if (!out) throw WriteError("write failed: " + path.string());
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorruptFileError("cannot open: " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) {
    throw CorruptFileError("not valid JSON: " + path.string());
  }
  return j;
}

void require_version(const json& j, const std::filesystem::path& path) {
  if (!j.is_object() || !j.contains("version") || j["version"] != 1) {
    throw CorruptFileError("unsupported file version: " + path.string());
  }
}

}  // namespace

void save_bank(const RegisterBank& bank, const std::filesystem::path& path) {
  json regs = json::array();
  for (const StateVec& s : bank.registers) {
    json r = json::array();
    for (const cplx& a : s.amp) r.push_back({a.real(), a.imag()});
    regs.push_back(std::move(r));
  }
  const json j = {{"version", 1},
                  {"label", bank.label},
                  {"n", bank.size()},
                  {"registers", std::move(regs)}};
  write_text(j.dump(2) + "\n", path);
}

RegisterBank load_bank(const std::filesystem::path& path) {
  const json j = read_json(path);
  require_version(j, path);
  RegisterBank bank;
  try {
    bank.label = j.at("label").get<std::string>();
    const auto n = j.at("n").get<std::size_t>();
    const json& regs = j.at("registers");
    if (!regs.is_array() || regs.size() != n) {
      throw CorruptFileError("register count mismatch: " + path.string());
    }
    for (const json& r : regs) {
      if (!r.is_array() || r.size() != 4) {
        throw CorruptFileError("register shape invalid: " + path.string());
      }
      StateVec s;
      for (std::size_t k = 0; k < 4; ++k) {
        s.amp[k] = cplx(r[k].at(0).get<double>(), r[k].at(1).get<double>());
      }
      if (std::abs(s.norm() - 1.0) > kNormTol) {
        throw CorruptFileError("register not unit-norm: " + path.string());
      }
      bank.registers.push_back(s);
    }
  } catch (const json::exception&) {
    throw CorruptFileError("malformed bank file: " + path.string());
  }
  return bank;
}

void save_storage_key(const SecretKey& key,
                      const std::filesystem::path& path) {
  json entries = json::array();
  for (const auto& e : key.entries) entries.push_back({e.theta, e.bit});
  const json j = {{"version", 1},
                  {"kind", "storage"},
                  {"n", key.size()},
                  {"entries", std::move(entries)}};
  write_text(j.dump(2) + "\n", path);
}

SecretKey load_storage_key(const std::filesystem::path& path) {
  const json j = read_json(path);
  require_version(j, path);
  SecretKey key;
  try {
    if (j.at("kind") != "storage") {
      throw CorruptFileError("not a storage key: " + path.string());
    }
    const auto n = j.at("n").get<std::size_t>();
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != n) {
      throw CorruptFileError("entry count mismatch: " + path.string());
    }
    for (const json& e : entries) {
      const double theta = e.at(0).get<double>();
      const int bit = e.at(1).get<int>();
      if (theta < 0.0 || theta >= 2.0 * M_PI || (bit != 0 && bit != 1)) {
        throw CorruptFileError("key entry out of range: " + path.string());
      }
      key.entries.push_back({theta, bit});
    }
  } catch (const json::exception&) {
    throw CorruptFileError("malformed key file: " + path.string());
  }
  return key;
}

void save_auth_key(const SharedAuthKey& key,
                   const std::filesystem::path& path) {
  json entries = json::array();
  for (const auto& e : key.entries()) entries.push_back({e.theta0, e.theta1});
  const json j = {{"version", 1},
                  {"kind", "auth"},
                  {"n", key.size()},
                  {"used", key.used()},
                  {"entries", std::move(entries)}};
  write_text(j.dump(2) + "\n", path);
}

SharedAuthKey load_auth_key(const std::filesystem::path& path) {
  const json j = read_json(path);
  require_version(j, path);
  try {
    if (j.at("kind") != "auth") {
      throw CorruptFileError("not an auth key: " + path.string());
    }
    const auto n = j.at("n").get<std::size_t>();
    const bool used = j.at("used").get<bool>();
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != n) {
      throw CorruptFileError("entry count mismatch: " + path.string());
    }
    std::vector<SharedAuthKey::Entry> parsed;
    parsed.reserve(n);
    for (const json& e : entries) {
      parsed.push_back({e.at(0).get<double>(), e.at(1).get<double>()});
    }
    return SharedAuthKey(std::move(parsed), used);
  } catch (const json::exception&) {
    throw CorruptFileError("malformed auth key file: " + path.string());
  } catch (const std::invalid_argument& err) {
    throw CorruptFileError(std::string(err.what()) + ": " + path.string());
  }
}

std::string sweep_csv_string(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "n,strategy,empirical_pass,analytic_pass,std_error,trials,seed\n";
  // Shortest representation that round-trips the double exactly.
  char buf[64];
  const auto num = [&buf](double v) {
    const auto r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
  };
  for (const SweepRow& r : rows) {
    out << r.n << ',' << r.strategy << ',' << num(r.empirical_pass) << ','
        << num(r.analytic_pass) << ',' << num(r.std_error) << ',' << r.trials
        << ',' << r.seed << '\n';
  }
  return out.str();
}

void save_sweep_csv(const std::vector<SweepRow>& rows,
                    const std::filesystem::path& path) {
  write_text(sweep_csv_string(rows), path);
}

}  // namespace qstore
