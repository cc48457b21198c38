// Copyright 2026 The collective-arb Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COLLECTIVE_ARB_TESTS_PROPERTY_SUITE_HPP_
#define COLLECTIVE_ARB_TESTS_PROPERTY_SUITE_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "audit.hpp"

namespace collective_arb::testing {

struct PropertyTally {
  std::string title;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool holds, const std::string& what);
  bool ok() const { return failures.empty(); }
};

// Randomized checks of the structural theorems on small markets. Items are
// keyed 'a'..'i'; each run() draws one market from the seed and exercises
// every item that applies to it.
class PropertySuite {
 public:
  explicit PropertySuite(CertificateAudit& audit);

  void run(std::uint64_t seed);

  const std::map<char, PropertyTally>& items() const { return items_; }
  std::size_t instances() const { return instances_; }
  // Random instances separating the implications NA => NCA(Y) => NA_i.
  std::size_t nca_without_na() const { return nca_without_na_; }
  std::size_t agents_without_nca() const { return agents_without_nca_; }

 private:
  CertificateAudit& audit_;
  std::map<char, PropertyTally> items_;
  std::size_t instances_ = 0;
  std::size_t nca_without_na_ = 0;
  std::size_t agents_without_nca_ = 0;
};

}  // namespace collective_arb::testing

#endif  // COLLECTIVE_ARB_TESTS_PROPERTY_SUITE_HPP_
