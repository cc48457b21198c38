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

#include "audit.hpp"

namespace collective_arb::testing {

void CertificateAudit::verdict(const std::string& what, const certify::Verdict& v) {
  ++checked_;
  if (!v) return;
  ++failed_;
  if (failures_.size() < 20) failures_.push_back(what + ": " + *v);
}

void CertificateAudit::agent(const MarketModel& m, std::size_t i, const ArbitrageCertificate& c) {
  verdict("agent arbitrage", certify::check_agent_arbitrage(m, i, c));
}

void CertificateAudit::global(const MarketModel& m, const ArbitrageCertificate& c) {
  verdict("global arbitrage", certify::check_global_arbitrage(m, c));
}

void CertificateAudit::collective(const MarketModel& m, const ExchangeCone& y,
                                  const ArbitrageCertificate& c) {
  verdict("collective arbitrage", certify::check_collective_arbitrage(m, y, c));
}

void CertificateAudit::polar(const MarketModel& m, const ExchangeCone& y, const PayoffMatrix& z) {
  verdict("polar witness", certify::check_polar_witness(m, y, z));
}

void CertificateAudit::measure(const MarketModel& m, const ExchangeCone& y, const MeasureVector& q,
                               bool equivalent) {
  verdict("measure vector", certify::check_measure_vector(m, y, q, equivalent));
}

void CertificateAudit::hedge(const MarketModel& m, const ExchangeCone* y, const ClaimVector& g,
                             const Hedge& h) {
  verdict("hedge", certify::check_hedge(m, y, g, h));
}

void CertificateAudit::agent_hedge(const MarketModel& m, std::size_t i,
                                   std::span<const Rational> claim, const Hedge& h) {
  verdict("agent hedge", certify::check_agent_hedge(m, i, claim, h));
}

void CertificateAudit::fairness(const MarketModel& m, const ExchangeCone& y, const ClaimVector& g,
                                const FairnessAllocation& f, const ExtendedRational& rho) {
  verdict("fairness", certify::check_fairness(m, y, g, f, rho));
}

}  // namespace collective_arb::testing
