// qstore_cli.cpp
// Command-line driver: store / read / check / attack / sweep and the
// authentication flow authgen / authsign / authverify.
//
// Exit codes: 0 success or all-pass, 1 check failure, 2 usage or
// validation error, 3 write failure, 4 corrupt input file.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qstore/analysis.hpp"
#include "qstore/authcode.hpp"
#include "qstore/serialization.hpp"

namespace {

using namespace qstore;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitWrite = 3;
constexpr int kExitCorrupt = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BitString parse_bits(const std::string& text) {
  BitString bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw UsageError(std::string("invalid bit character '") + ch + "'");
    }
    bits.push_back(ch - '0');
  }
  return bits;
}

std::string bits_to_string(const BitString& bits) {
  std::string s;
  s.reserve(bits.size());
  for (int b : bits) s.push_back(static_cast<char>('0' + b));
  return s;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(item, &pos);
    if (pos != item.size()) throw UsageError("invalid index '" + item + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

AttackStrategy parse_strategy(const std::string& name) {
  if (name == "guess") return GuessForge{};
  if (name == "measure-resend") return MeasureResend{};
  if (name == "flip") return UnitaryFlip{};
  throw UsageError("unknown strategy '" + name +
                   "' (expected guess, measure-resend, or flip)");
}

int cmd_store(const std::string& bits_text, std::uint64_t seed,
              const std::string& bank_path, const std::string& key_path) {
  const BitString c = parse_bits(bits_text);
  RandomSource rng(seed);
  auto [bank, key] = store(c, rng);
  save_bank(bank, bank_path);
  save_storage_key(key, key_path);
  std::cout << bank.size() << "\n";
  return kExitOk;
}

int cmd_read(const std::string& bank_path, std::uint64_t seed) {
  RegisterBank bank = load_bank(bank_path);
  RandomSource rng(seed);
  auto [bits, post] = read_bank(bank, rng);
  save_bank(post, bank_path);
  std::cout << bits_to_string(bits) << "\n";
  return kExitOk;
}

int cmd_check(const std::string& bank_path, const std::string& key_path,
              std::uint64_t seed, const std::optional<std::string>& indices) {
  const RegisterBank bank = load_bank(bank_path);
  const SecretKey key = load_storage_key(key_path);
  if (bank.size() != key.size()) {
    throw UsageError("bank and key lengths differ");
  }
  RandomSource rng(seed);
  CheckReport report;
  if (indices) {
    report = check_subset(bank, key, parse_index_list(*indices), rng).first;
  } else {
    report = check_bank(bank, key, rng).first;
  }
  std::cout << "index pass\n";
  for (const auto& r : report.per_index) {
    std::cout << r.index << " " << (r.pass ? "yes" : "no") << "\n";
  }
  std::cout << "verdict: " << (report.all_pass ? "original" : "forged")
            << "\n";
  return report.all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_attack(const std::string& name, std::size_t n, std::uint64_t trials,
               std::uint64_t seed, const std::string& out_path) {
  const AttackStrategy strategy = parse_strategy(name);
  const McEstimate est = mc_forgery_pass_rate(strategy, n, trials, seed);
  const double q = expected_pass_prob(strategy);
  std::vector<SweepRow> rows{{n, strategy_name(strategy), est.mean,
                              std::pow(q, static_cast<double>(n)),
                              est.std_error, trials, seed}};
  save_sweep_csv(rows, out_path);
  std::cout << sweep_csv_string(rows);
  return kExitOk;
}

int cmd_sweep(const std::string& name, const std::string& n_list,
              std::uint64_t trials, std::uint64_t seed,
              const std::string& out_path) {
  const AttackStrategy strategy = parse_strategy(name);
  const std::vector<std::size_t> n_values = parse_index_list(n_list);
  if (n_values.empty()) throw UsageError("empty n list");
  const auto rows = mc_sweep(strategy, n_values, trials, seed);
  save_sweep_csv(rows, out_path);
  std::cout << sweep_csv_string(rows);
  return kExitOk;
}

int cmd_authgen(std::size_t n, std::uint64_t seed,
                const std::string& key_path) {
  if (n < 1) throw UsageError("n must be >= 1");
  RandomSource rng(seed);
  const SharedAuthKey key = auth_keygen(n, rng);
  save_auth_key(key, key_path);
  std::cout << n << "\n";
  return kExitOk;
}

int cmd_authsign(const std::string& bits_text, const std::string& key_path,
                 const std::string& bank_path) {
  const BitString c = parse_bits(bits_text);
  SharedAuthKey key = load_auth_key(key_path);
  if (key.used()) throw UsageError("auth key already used");
  const RegisterBank bank = auth_encode(c, key);
  save_bank(bank, bank_path);
  save_auth_key(key, key_path);  // persists the used flag
  std::cout << bank.size() << "\n";
  return kExitOk;
}

int cmd_authverify(const std::string& bank_path, const std::string& key_path,
                   std::uint64_t seed) {
  const RegisterBank bank = load_bank(bank_path);
  const SharedAuthKey key = load_auth_key(key_path);
  if (bank.size() != key.size()) {
    throw UsageError("bank and key lengths differ");
  }
  RandomSource rng(seed);
  auto [bits, authentic] = auth_verify(bank, key, rng);
  std::cout << bits_to_string(bits) << "\n"
            << "verdict: " << (authentic ? "authentic" : "tampered") << "\n";
  return authentic ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum register storage, checking, and attack analysis"};
  app.require_subcommand(1);

  std::string bits_text, bank_path, key_path, out_path, strategy, n_list;
  std::optional<std::string> indices;
  std::uint64_t seed = 0, trials = 1000000;
  std::size_t n = 1;

  auto* c_store = app.add_subcommand("store", "Store bits in a new bank");
  c_store->add_option("bits", bits_text, "bit string, e.g. 1011")->required();
  c_store->add_option("--seed", seed);
  c_store->add_option("--bank", bank_path, "output bank file")->required();
  c_store->add_option("--key", key_path, "output key file")->required();

  auto* c_read = app.add_subcommand("read", "Read the bits of a bank");
  c_read->add_option("bank", bank_path)->required();
  c_read->add_option("--seed", seed);

  auto* c_check = app.add_subcommand("check", "Check a bank against a key");
  c_check->add_option("bank", bank_path)->required();
  c_check->add_option("key", key_path)->required();
  c_check->add_option("--seed", seed);
  c_check->add_option("--indices", indices, "comma-separated subset");

  auto* c_attack = app.add_subcommand("attack", "Monte Carlo forgery rate");
  c_attack->add_option("strategy", strategy, "guess|measure-resend|flip")
      ->required();
  c_attack->add_option("--n", n, "bank length");
  c_attack->add_option("--trials", trials);
  c_attack->add_option("--seed", seed);
  c_attack->add_option("--out", out_path, "CSV output")->required();

  auto* c_sweep = app.add_subcommand("sweep", "Forgery rate over bank sizes");
  c_sweep->add_option("strategy", strategy)->required();
  c_sweep->add_option("--n-list", n_list, "comma-separated, e.g. 1,2,4,8")
      ->required();
  c_sweep->add_option("--trials", trials);
  c_sweep->add_option("--seed", seed);
  c_sweep->add_option("--out", out_path, "CSV output")->required();

  auto* c_authgen = app.add_subcommand("authgen", "Generate a shared auth key");
  c_authgen->add_option("n", n, "message length")->required();
  c_authgen->add_option("--seed", seed);
  c_authgen->add_option("--key", key_path, "output key file")->required();

  auto* c_authsign = app.add_subcommand("authsign", "Encode a message");
  c_authsign->add_option("bits", bits_text)->required();
  c_authsign->add_option("--key", key_path)->required();
  c_authsign->add_option("--bank", bank_path, "output bank file")->required();

  auto* c_authverify =
      app.add_subcommand("authverify", "Read and authenticate a message");
  c_authverify->add_option("bank", bank_path)->required();
  c_authverify->add_option("key", key_path)->required();
  c_authverify->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (c_store->parsed())
      return cmd_store(bits_text, seed, bank_path, key_path);
    if (c_read->parsed()) return cmd_read(bank_path, seed);
    if (c_check->parsed()) return cmd_check(bank_path, key_path, seed, indices);
    if (c_attack->parsed())
      return cmd_attack(strategy, n, trials, seed, out_path);
    if (c_sweep->parsed())
      return cmd_sweep(strategy, n_list, trials, seed, out_path);
    if (c_authgen->parsed()) return cmd_authgen(n, seed, key_path);
    if (c_authsign->parsed())
      return cmd_authsign(bits_text, key_path, bank_path);
    if (c_authverify->parsed())
      return cmd_authverify(bank_path, key_path, seed);
  } catch (const CorruptFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCorrupt;
  } catch (const WriteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitWrite;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
