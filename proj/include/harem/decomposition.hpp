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

#ifndef HAREM_DECOMPOSITION_HPP_
#define HAREM_DECOMPOSITION_HPP_

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "harem/action.hpp"
#include "harem/core_graph.hpp"
#include "harem/free_group.hpp"
#include "harem/harem_engine.hpp"

namespace harem {

enum class SpecMode { kTight, kCorollary };

// Parameters of the bipartite action graph of a free group acting on itself
// by left multiplication: x ~ y iff y in K x.
struct ActionGraphSpec {
  unsigned rank = 2;
  GeneratorSet R = GeneratorSet::standard(2);
  std::uint64_t n = 1;  // expansion parameter: |R F| >= (1 + 1/n) |F|
  unsigned n1 = 1;      // power with (1 + 1/n)^n1 >= 3 (corollary mode)
  SpecMode mode = SpecMode::kTight;
  GeneratorSet K = GeneratorSet::standard(2);

  // K = R = {1, generators and inverses}.
  static ActionGraphSpec tight(unsigned rank);
  // K = R^n1 with the least n1 such that (1 + 1/n)^n1 >= 3.
  static ActionGraphSpec corollary(unsigned rank, std::uint64_t n);

  // Throws std::invalid_argument if the power inequality fails (corollary
  // mode) or K is not R^n1 / R.
  void validate() const;
};

// Least t with (1 + 1/n)^t >= 3, checked in exact arithmetic.
unsigned minimal_power(std::uint64_t n);
// Exact test of (1 + 1/n)^t >= 3.
bool power_reaches_three(std::uint64_t n, unsigned t);

BipartiteOracle build_action_graph(const ActionGraphSpec& spec);

struct DecompositionRow {
  Index index = 0;
  Word word;
  Index psi1 = 0;
  Word psi1_word;
  Index psi2 = 0;
  Word psi2_word;
  Word theta1;
  Word theta2;

  friend bool operator==(const DecompositionRow&, const DecompositionRow&) = default;
};

// Paradoxical decomposition read off the engine's perfect (1,2)-matching:
// psi_1(m) < psi_2(m) are the two partners of m, theta_i(m) the shortlex
// first k in K with k m = psi_i(m), A_k = {m : theta_1(m) = k} and
// B_k = {m : theta_2(m) = k}. Inherits the engine's single-user contract.
class ParadoxDecomp {
 public:
  explicit ParadoxDecomp(ActionGraphSpec spec, EngineOptions options = {});

  const ActionGraphSpec& spec() const { return spec_; }
  HaremEngine& engine() { return engine_; }
  const HaremEngine& engine() const { return engine_; }

  std::pair<Index, Index> psi(Index m);
  // which is 1 or 2.
  Word theta(Index m, int which);
  bool a_member(const Word& k, Index m) { return theta(m, 1) == k; }
  bool b_member(const Word& k, Index m) { return theta(m, 2) == k; }
  DecompositionRow row(Index m);

 private:
  Word theta_for(Index m, Index target) const;

  ActionGraphSpec spec_;
  Enumeration enumeration_;
  HaremEngine engine_;
};

// The textbook four-piece decomposition of F2. W(x) is the set of reduced
// words starting with x. The identity and the powers a^-n (n >= 1) are moved
// from the trunk into W(a):
//   W'(a) = W(a) + {e} + {A^n},   W'(A) = W(A) - {A^n},
// so that F2 = W'(a) + a W'(A) = W(b) + b W(B) exactly. As a decomposition,
// K = {e, A, B}, theta_1 = e on W'(a) and A elsewhere, theta_2 = e on W(b)
// and B elsewhere.
class ClassicF2Decomp {
 public:
  enum class Piece { kWa, kWA, kWb, kWB };

  ClassicF2Decomp() : enumeration_(2) {}

  Piece classify(Index m) const;
  Word theta1(Index m) const;
  Word theta2(Index m) const;
  std::pair<Index, Index> psi(Index m) const;
  DecompositionRow row(Index m) const;

 private:
  Enumeration enumeration_;
};

std::string to_string(ClassicF2Decomp::Piece p);

struct DecompositionViolation {
  enum class Kind {
    kThetaAOutsideK,  // classify_A(point) not in K
    kThetaBOutsideK,
    kCoverage,        // point hit by `hits` translates instead of exactly one
    kThetaUnsound,    // act(theta_i(x), x) != psi_i(x)
    kImageMismatch    // psi images do not partition the committed right set
  };
  Kind kind;
  Index point = 0;
  std::size_t hits = 0;

  std::string describe() const;
  friend bool operator==(const DecompositionViolation&,
                         const DecompositionViolation&) = default;
};

struct DecompositionReport {
  std::size_t checked = 0;
  std::vector<DecompositionViolation> violations;
  bool pass() const { return violations.empty(); }
};

using Classifier = std::function<Word(Index)>;

// Checks, for every m < window, that classify_A(m) and classify_B(m) lie in
// K and that m is hit by exactly one translate among k A_k and k B_k.
// Preimages are searched in the word-metric ball of radius max |k| around m.
DecompositionReport verify_decomposition(const Classifier& classify_A,
                                         const Classifier& classify_B,
                                         const GeneratorSet& K, Index window);

// The same identities restricted to what the engine has committed so far:
// theta soundness on every committed left vertex, psi images partitioning
// the removed right vertices, and exactly one translate hitting each of them.
// Runs no construction steps.
DecompositionReport verify_committed(const ParadoxDecomp& d);

struct CertificateEntry {
  bool expands = false;         // some k in R has n |F \ kF| >= |F|
  std::optional<Word> witness;  // shortlex first such k
};

// Throws EmptySetError if a set in `family` is empty.
std::vector<CertificateEntry> folner_failure_certificate(
    const ActionGraphSpec& spec, const std::vector<IndexList>& family);

inline constexpr const char* kTsvHeader =
    "index\tword\tpsi1\tpsi1_word\tpsi2\tpsi2_word\ttheta1\ttheta2";
void write_tsv_header(std::ostream& out);
void write_tsv_row(std::ostream& out, const DecompositionRow& row);
// Parses a TSV dump; throws ParseError.
std::vector<DecompositionRow> read_decomposition_tsv(std::istream& in, unsigned rank);

}  // namespace harem

#endif  // HAREM_DECOMPOSITION_HPP_
