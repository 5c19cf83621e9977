#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sigma8 {

/// Outcome of one machine-checked identity.
struct CheckReport {
  std::string theorem_id;
  std::string theorem;
  std::string inputs_digest;
  std::vector<std::pair<std::string, std::string>> quantities;
  bool passed = false;
  std::string witness;
  std::string inputs;

  void add(std::string name, std::string value) {
    quantities.emplace_back(std::move(name), std::move(value));
  }
  /// Stable multi-line rendering used by the CLI and golden files.
  std::string to_text() const;
};

/// 64-bit FNV-1a of `bytes` as 16 hex digits.
std::string fnv1a_digest(std::string_view bytes);

/// Fills inputs and inputs_digest from the serialized inputs.
void attach_inputs(CheckReport& report, std::string serialized);

}  // namespace sigma8
