// Copyright 2026 The Harem Authors
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

#include "harem/decomposition.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "harem/errors.hpp"

namespace harem {

bool power_reaches_three(std::uint64_t n, unsigned t) {
  using boost::multiprecision::cpp_int;
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  cpp_int num = boost::multiprecision::pow(cpp_int(n) + 1, t);
  cpp_int den = boost::multiprecision::pow(cpp_int(n), t);
  return num >= 3 * den;
}

unsigned minimal_power(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  double estimate = std::log(3.0) / std::log1p(1.0 / static_cast<double>(n));
  unsigned t = std::max(1u, static_cast<unsigned>(estimate));
  while (t > 1 && power_reaches_three(n, t - 1)) --t;
  while (!power_reaches_three(n, t)) ++t;
  return t;
}

ActionGraphSpec ActionGraphSpec::tight(unsigned rank) {
  ActionGraphSpec s;
  s.rank = rank;
  s.R = GeneratorSet::standard(rank);
  s.n = 1;
  s.n1 = 1;
  s.mode = SpecMode::kTight;
  s.K = s.R;
  return s;
}

ActionGraphSpec ActionGraphSpec::corollary(unsigned rank, std::uint64_t n) {
  ActionGraphSpec s;
  s.rank = rank;
  s.R = GeneratorSet::standard(rank);
  s.n = n;
  s.n1 = minimal_power(n);
  s.mode = SpecMode::kCorollary;
  s.K = GeneratorSet::power(s.R, s.n1);
  return s;
}

void ActionGraphSpec::validate() const {
  if (R.rank() != rank || K.rank() != rank) {
    throw std::invalid_argument("spec rank mismatch");
  }
  if (mode == SpecMode::kTight) {
    if (!(K == R)) throw std::invalid_argument("tight mode requires K = R");
    return;
  }
  if (!power_reaches_three(n, n1)) {
    throw std::invalid_argument("(1 + 1/n)^n1 < 3 for n = " + std::to_string(n) +
                                ", n1 = " + std::to_string(n1));
  }
  if (!(K == GeneratorSet::power(R, n1))) {
    throw std::invalid_argument("corollary mode requires K = R^n1");
  }
}

BipartiteOracle build_action_graph(const ActionGraphSpec& spec) {
  struct Shared {
    Enumeration e;
    std::vector<Word> K;
  };
  auto s = std::make_shared<const Shared>(Shared{Enumeration(spec.rank), spec.K.elements()});
  BipartiteOracle o;
  o.name = "F" + std::to_string(spec.rank) +
           (spec.mode == SpecMode::kTight ? "-tight" : "-corollary");
  // K is symmetric, so both sides have the same neighborhoods.
  o.neighbors = [s](const Vertex& v) {
    IndexList out;
    out.reserve(s->K.size());
    Word w = s->e.index_to_word(v.index);
    for (const Word& k : s->K) out.push_back(s->e.word_to_index(mul(k, w)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  // Left multiplication by distinct group elements gives distinct points.
  o.degree = [s](const Vertex&) { return s->K.size(); };
  return o;
}

ParadoxDecomp::ParadoxDecomp(ActionGraphSpec spec, EngineOptions options)
    : spec_(std::move(spec)),
      enumeration_(spec_.rank),
      engine_(build_action_graph(spec_), 2, HWitness::identity(), options) {}

std::pair<Index, Index> ParadoxDecomp::psi(Index m) {
  IndexList star = engine_.match_left(m);
  return {std::min(star[0], star[1]), std::max(star[0], star[1])};
}

Word ParadoxDecomp::theta_for(Index m, Index target) const {
  for (const Word& k : spec_.K.elements()) {
    if (act(enumeration_, k, m) == target) return k;
  }
  throw InternalError("no element of K carries " + std::to_string(m) + " to " +
                      std::to_string(target));
}

Word ParadoxDecomp::theta(Index m, int which) {
  if (which != 1 && which != 2) throw std::invalid_argument("which must be 1 or 2");
  auto [p1, p2] = psi(m);
  return theta_for(m, which == 1 ? p1 : p2);
}

DecompositionRow ParadoxDecomp::row(Index m) {
  auto [p1, p2] = psi(m);
  return {m,
          enumeration_.index_to_word(m),
          p1,
          enumeration_.index_to_word(p1),
          p2,
          enumeration_.index_to_word(p2),
          theta_for(m, p1),
          theta_for(m, p2)};
}

ClassicF2Decomp::Piece ClassicF2Decomp::classify(Index m) const {
  Word w = enumeration_.index_to_word(m);
  if (w.is_identity()) return Piece::kWa;
  const auto& ls = w.letters();
  switch (ls.front()) {
    case 1:
      return Piece::kWa;
    case -1:
      // Pure powers of A belong to W'(a).
      return std::all_of(ls.begin(), ls.end(), [](Letter x) { return x == -1; })
                 ? Piece::kWa
                 : Piece::kWA;
    case 2:
      return Piece::kWb;
    default:
      return Piece::kWB;
  }
}

Word ClassicF2Decomp::theta1(Index m) const {
  return classify(m) == Piece::kWa ? Word::identity(2) : Word::generator(2, 1, true);
}

Word ClassicF2Decomp::theta2(Index m) const {
  return classify(m) == Piece::kWb ? Word::identity(2) : Word::generator(2, 2, true);
}

std::pair<Index, Index> ClassicF2Decomp::psi(Index m) const {
  return {act(enumeration_, theta1(m), m), act(enumeration_, theta2(m), m)};
}

DecompositionRow ClassicF2Decomp::row(Index m) const {
  auto [p1, p2] = psi(m);
  return {m,
          enumeration_.index_to_word(m),
          p1,
          enumeration_.index_to_word(p1),
          p2,
          enumeration_.index_to_word(p2),
          theta1(m),
          theta2(m)};
}

std::string to_string(ClassicF2Decomp::Piece p) {
  switch (p) {
    case ClassicF2Decomp::Piece::kWa:
      return "W(a)";
    case ClassicF2Decomp::Piece::kWA:
      return "W(A)";
    case ClassicF2Decomp::Piece::kWb:
      return "W(b)";
    case ClassicF2Decomp::Piece::kWB:
      return "W(B)";
  }
  return "?";
}

std::string DecompositionViolation::describe() const {
  std::string at = " at " + std::to_string(point);
  switch (kind) {
    case Kind::kThetaAOutsideK:
      return "A-classification outside K" + at;
    case Kind::kThetaBOutsideK:
      return "B-classification outside K" + at;
    case Kind::kCoverage:
      return "covered by " + std::to_string(hits) + " translates" + at;
    case Kind::kThetaUnsound:
      return "theta does not realize psi" + at;
    case Kind::kImageMismatch:
      return "psi images do not partition the committed set" + at;
  }
  return "unknown violation" + at;
}

DecompositionReport verify_decomposition(const Classifier& classify_A,
                                         const Classifier& classify_B,
                                         const GeneratorSet& K, Index window) {
  using V = DecompositionViolation;
  const Enumeration e(K.rank());
  const GeneratorSet unit = GeneratorSet::standard(K.rank());
  const Index reach = K.max_length();
  DecompositionReport rep;
  for (Index m = 0; m < window; ++m) {
    ++rep.checked;
    if (!K.contains(classify_A(m))) rep.violations.push_back({V::Kind::kThetaAOutsideK, m, 0});
    if (!K.contains(classify_B(m))) rep.violations.push_back({V::Kind::kThetaBOutsideK, m, 0});
    std::size_t hits = 0;
    for (Index x : ball(unit, m, reach)) {
      for (const Classifier* c : {&classify_A, &classify_B}) {
        Word k = (*c)(x);
        if (K.contains(k) && act(e, k, x) == m) ++hits;
      }
    }
    if (hits != 1) rep.violations.push_back({V::Kind::kCoverage, m, hits});
  }
  return rep;
}

DecompositionReport verify_committed(const ParadoxDecomp& d) {
  using V = DecompositionViolation;
  const ActionGraphSpec& spec = d.spec();
  const Enumeration e(spec.rank);
  const GeneratorSet unit = GeneratorSet::standard(spec.rank);
  const Index reach = spec.K.max_length();
  EngineSnapshot snap = d.engine().committed_prefix();
  DecompositionReport rep;

  // theta_1, theta_2 of every committed left vertex, or nothing if unsound.
  std::map<Index, std::pair<Word, Word>> thetas;
  std::map<Index, std::size_t> image_count;
  for (const auto& [x, star] : snap.committed.stars) {
    ++rep.checked;
    Index p1 = std::min(star[0], star[1]), p2 = std::max(star[0], star[1]);
    ++image_count[p1];
    ++image_count[p2];
    std::optional<Word> t1, t2;
    for (const Word& k : spec.K.elements()) {
      Index y = act(e, k, x);
      if (!t1 && y == p1) t1 = k;
      if (!t2 && y == p2) t2 = k;
    }
    if (!t1 || !t2) {
      rep.violations.push_back({V::Kind::kThetaUnsound, x, 0});
      continue;
    }
    thetas.emplace(x, std::make_pair(*t1, *t2));
  }
  IndexList images;
  for (const auto& [y, c] : image_count) {
    images.push_back(y);
    if (c != 1) rep.violations.push_back({V::Kind::kImageMismatch, y, c});
  }
  if (images != snap.removed_right) {
    IndexList diff;
    std::set_symmetric_difference(images.begin(), images.end(), snap.removed_right.begin(),
                                  snap.removed_right.end(), std::back_inserter(diff));
    for (Index y : diff) rep.violations.push_back({V::Kind::kImageMismatch, y, 0});
  }
  for (Index m : snap.removed_right) {
    std::size_t hits = 0;
    for (Index x : ball(unit, m, reach)) {
      auto it = thetas.find(x);
      if (it == thetas.end()) continue;
      if (act(e, it->second.first, x) == m) ++hits;
      if (act(e, it->second.second, x) == m) ++hits;
    }
    if (hits != 1) rep.violations.push_back({V::Kind::kCoverage, m, hits});
  }
  return rep;
}

std::vector<CertificateEntry> folner_failure_certificate(
    const ActionGraphSpec& spec, const std::vector<IndexList>& family) {
  const Enumeration e(spec.rank);
  std::vector<CertificateEntry> out;
  for (const IndexList& F : family) {
    if (F.empty()) throw EmptySetError("empty set in certificate family");
    std::unordered_set<Index> members(F.begin(), F.end());
    CertificateEntry entry;
    for (const Word& k : spec.R.elements()) {
      std::uint64_t inside = 0;
      for (Index x : members) inside += members.count(act(e, k, x));
      std::uint64_t outside = members.size() - inside;
      if (spec.n * outside >= members.size()) {
        entry.expands = true;
        entry.witness = k;
        break;
      }
    }
    out.push_back(std::move(entry));
  }
  return out;
}

void write_tsv_header(std::ostream& out) { out << kTsvHeader << "\n"; }

void write_tsv_row(std::ostream& out, const DecompositionRow& r) {
  out << r.index << '\t' << format_word(r.word) << '\t' << r.psi1 << '\t'
      << format_word(r.psi1_word) << '\t' << r.psi2 << '\t' << format_word(r.psi2_word)
      << '\t' << format_word(r.theta1) << '\t' << format_word(r.theta2) << "\n";
}

std::vector<DecompositionRow> read_decomposition_tsv(std::istream& in, unsigned rank) {
  std::vector<DecompositionRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != kTsvHeader) throw ParseError(line_no, "unexpected TSV header");
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, '\t')) f.push_back(cell);
    if (f.size() != 8) throw ParseError(line_no, "expected 8 columns");
    try {
      rows.push_back({std::stoull(f[0]), parse_word(rank, f[1]), std::stoull(f[2]),
                      parse_word(rank, f[3]), std::stoull(f[4]), parse_word(rank, f[5]),
                      parse_word(rank, f[6]), parse_word(rank, f[7])});
    } catch (const std::invalid_argument& err) {
      throw ParseError(line_no, err.what());
    } catch (const std::out_of_range& err) {
      throw ParseError(line_no, err.what());
    }
  }
  return rows;
}

}  // namespace harem
