#include "sigma8/report.hpp"

#include <cstdint>
#include <cstdio>

namespace sigma8 {

std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void attach_inputs(CheckReport& report, std::string serialized) {
  report.inputs_digest = fnv1a_digest(serialized);
  report.inputs = std::move(serialized);
}

std::string CheckReport::to_text() const {
  std::string out;
  out += "check " + theorem_id + ": " + theorem + "\n";
  if (!inputs_digest.empty()) out += "  inputs " + inputs_digest + "\n";
  for (const auto& [k, v] : quantities) out += "  " + k + " = " + v + "\n";
  out += std::string("  verdict ") + (passed ? "PASS" : "FAIL") + "\n";
  if (!passed && !witness.empty()) out += "  witness " + witness + "\n";
  return out;
}

}  // namespace sigma8
