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

#include "retroeda/expander.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>

#include "retroeda/errors.h"

namespace retroeda {
namespace {

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

bool ValidBeta(double beta) { return beta > 0.0 && beta <= 1.0; }

}  // namespace

std::string FormatDouble(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

void SortCandidates(std::vector<Candidate>& candidates) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     if (a.beta != b.beta) return a.beta > b.beta;
                     return a.reactants < b.reactants;
                   });
}

ReactionTable::ReactionTable(Entries entries) : entries_(std::move(entries)) {
  for (auto& [product, candidates] : entries_) {
    for (const auto& c : candidates) {
      if (c.reactants.empty()) {
        throw Error("candidate for " + product.text() + " has no reactants");
      }
      if (!ValidBeta(c.beta)) {
        throw Error("candidate for " + product.text() +
                    " has beta outside (0, 1]");
      }
    }
    SortCandidates(candidates);
  }
}

ExpansionResult ReactionTable::Expand(const Molecule& product, int k) const {
  const auto it = entries_.find(product);
  if (it == entries_.end() || k <= 0) return {};
  const auto& list = it->second;
  return ExpansionResult(list.data(),
                         std::min(list.size(), static_cast<std::size_t>(k)));
}

ReactionTable ParseReactionTable(std::istream& in, const std::string& source) {
  ReactionTable::Entries entries;
  std::map<Molecule, std::set<long>> ranks_seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    const auto fields = Split(line, '\t');
    if (fields.size() != 4) {
      throw ParseError(source, line_no,
                       "expected 4 tab-separated fields, got " +
                           std::to_string(fields.size()));
    }
    try {
      Molecule product = Molecule::Canonicalize(fields[0]);

      long rank = 0;
      const auto rank_text = fields[1];
      const auto rank_res = std::from_chars(
          rank_text.data(), rank_text.data() + rank_text.size(), rank);
      if (rank_res.ec != std::errc() ||
          rank_res.ptr != rank_text.data() + rank_text.size() || rank < 1) {
        throw ParseError(source, line_no, "rank must be a positive integer");
      }
      if (!ranks_seen[product].insert(rank).second) {
        throw ParseError(source, line_no,
                         "duplicate rank " + std::to_string(rank) + " for " +
                             product.text());
      }

      double beta = 0.0;
      const auto beta_text = fields[2];
      const auto beta_res = std::from_chars(
          beta_text.data(), beta_text.data() + beta_text.size(), beta);
      if (beta_res.ec != std::errc() ||
          beta_res.ptr != beta_text.data() + beta_text.size()) {
        throw ParseError(source, line_no, "beta is not a number");
      }
      if (!ValidBeta(beta)) {
        throw BetaOutOfRange(source, line_no,
                             "beta " + std::string(beta_text) +
                                 " outside (0, 1]");
      }

      Candidate candidate;
      candidate.beta = beta;
      for (const auto part : Split(fields[3], '.')) {
        candidate.reactants.push_back(Molecule::Canonicalize(part));
      }
      entries[std::move(product)].push_back(std::move(candidate));
    } catch (const EmptyMolecule& e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  return ReactionTable(std::move(entries));
}

ReactionTable LoadReactionTable(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open reaction-table file");
  return ParseReactionTable(in, path);
}

void WriteReactionTable(std::ostream& out, const ReactionTable& table) {
  for (const auto& [product, candidates] : table.entries()) {
    if (product.text().front() == '#') {
      throw Error("product '" + product.text() + "' would read back as a comment");
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const auto& c = candidates[i];
      out << product.text() << '\t' << (i + 1) << '\t' << FormatDouble(c.beta)
          << '\t';
      for (std::size_t r = 0; r < c.reactants.size(); ++r) {
        if (r > 0) out << '.';
        out << c.reactants[r].text();
      }
      out << '\n';
    }
  }
}

ExpansionCache::ExpansionCache(const Expander& inner, int k)
    : inner_(inner), k_(k) {
  if (k < 1) throw Error("beam width must be at least 1");
}

ExpansionResult ExpansionCache::Expand(const Molecule& product, int k) const {
  const auto trim = [k](ExpansionResult full) {
    return full.first(std::min(full.size(), static_cast<std::size_t>(
                                                std::max(k, 0))));
  };
  {
    std::shared_lock lock(mutex_);
    if (const auto it = memo_.find(product); it != memo_.end()) {
      return trim(it->second);
    }
  }
  std::unique_lock lock(mutex_);
  if (const auto it = memo_.find(product); it != memo_.end()) {
    return trim(it->second);
  }
  const ExpansionResult full = inner_.Expand(product, k_);
  calls_.fetch_add(1, std::memory_order_relaxed);
  memo_.emplace(product, full);
  return trim(full);
}

}  // namespace retroeda
