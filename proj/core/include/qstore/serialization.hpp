// serialization.hpp
// Versioned JSON files for banks and keys, and the CSV experiment
// format. Text output is deterministic: identical values give byte
// identical files.

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "qstore/analysis.hpp"
#include "qstore/authcode.hpp"
#include "qstore/protocol.hpp"

namespace qstore {

struct CorruptFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WriteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bank file: version, label, n, registers as n x 4 (re, im) pairs.
// Loading validates unit norm within 1e-9 per register.
void save_bank(const RegisterBank& bank, const std::filesystem::path& path);
RegisterBank load_bank(const std::filesystem::path& path);

// Key file, kind "storage": entries (theta, bit).
void save_storage_key(const SecretKey& key,
                      const std::filesystem::path& path);
SecretKey load_storage_key(const std::filesystem::path& path);

// Key file, kind "auth": entries (theta0, theta1) plus the used flag.
void save_auth_key(const SharedAuthKey& key,
                   const std::filesystem::path& path);
SharedAuthKey load_auth_key(const std::filesystem::path& path);

// CSV with the fixed header
// n,strategy,empirical_pass,analytic_pass,std_error,trials,seed.
void save_sweep_csv(const std::vector<SweepRow>& rows,
                    const std::filesystem::path& path);
std::string sweep_csv_string(const std::vector<SweepRow>& rows);

}  // namespace qstore
