#pragma once

// Verifier outcome: number of checked identities plus the failing ones.

#include <json.hpp>

#include <cstddef>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace tetra {

struct Failure {
  std::vector<int> tuple;
  std::string lhs;
  std::string rhs;
};

struct Report {
  std::string target;
  std::size_t checked = 0;
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }

  void merge(Report&& o) {
    checked += o.checked;
    for (auto& f : o.failures) failures.push_back(std::move(f));
  }
};

// {target, checked, failures: [[tuple, lhs, rhs], ...]}
inline nlohmann::json to_json(const Report& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) failures.push_back(nlohmann::json::array({f.tuple, f.lhs, f.rhs}));
  return {{"target", r.target}, {"checked", r.checked}, {"failures", failures}, {"passed", r.passed()}};
}

inline std::vector<int> join_tuple(std::initializer_list<const std::vector<int>*> parts) {
  std::vector<int> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

inline std::string join_strings(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return "[" + out + "]";
}

}  // namespace tetra
