// Copyright 2026 The retroeda Authors.
//
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

#include "retroeda/report.h"

#include <algorithm>

namespace retroeda {

bool RouteArchive::Offer(const Route& route, const FitnessRecord& fit) {
  if (route.status != RouteStatus::kFeasible) return false;
  if (!seen_.insert(route.ranks()).second) return false;
  routes_.push_back(ArchivedRoute{route, fit});
  return true;
}

bool SearchReport::HasRoute(const std::vector<int>& ranks) const {
  return std::any_of(archive.begin(), archive.end(), [&](const ArchivedRoute& a) {
    return a.route.ranks() == ranks;
  });
}

double SearchReport::BestArchivedF() const {
  double best = 0.0;
  for (const auto& a : archive) best = std::max(best, a.fit.f);
  return best;
}

}  // namespace retroeda
