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

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "harem/action.hpp"
#include "harem/amenability.hpp"
#include "harem/cli.hpp"
#include "harem/core_graph.hpp"
#include "harem/decomposition.hpp"
#include "harem/errors.hpp"
#include "harem/flow_matching.hpp"
#include "harem/harem_engine.hpp"

namespace py = pybind11;
using namespace harem;

namespace {

std::vector<Word> words(unsigned rank, const std::vector<std::string>& ws) {
  std::vector<Word> out;
  for (const auto& w : ws) out.push_back(parse_word(rank, w));
  return out;
}

py::object to_python(const std::optional<HaremMatching>& m) {
  if (!m) return py::none();
  return py::cast(m->stars);
}

MatchingRequest make_request(const FiniteBipartiteGraph& g, unsigned k,
                             std::optional<IndexList> required_left,
                             std::optional<IndexList> required_right,
                             IndexList optional_right) {
  MatchingRequest req = MatchingRequest::all_required(g, k);
  if (required_left) req.required_left = *required_left;
  if (required_right) req.required_right = *required_right;
  req.optional_right = std::move(optional_right);
  return req;
}

// Engine over either the built-in F2 graph or a finite graph.
class PyEngine {
 public:
  static PyEngine free_group(const std::string& mode, std::uint64_t n, std::size_t max_ball) {
    auto spec = mode == "tight" ? ActionGraphSpec::tight(2) : ActionGraphSpec::corollary(2, n);
    return PyEngine(build_action_graph(spec), 2, HWitness::identity(), max_ball);
  }
  static PyEngine finite(const FiniteBipartiteGraph& g, unsigned k, std::size_t max_ball) {
    return PyEngine(as_oracle(g), k, HWitness::vacuous(g.left_ids().size()), max_ball);
  }

  py::object run_step() {
    auto c = engine_.run_step();
    if (!c) return py::none();
    py::dict d;
    d["left"] = c->left;
    d["rights"] = c->rights;
    d["pivot"] = to_string(c->pivot);
    d["radius"] = c->radius;
    return std::move(d);
  }
  IndexList match_left(Index i) { return engine_.match_left(i); }
  Index match_right(Index j) { return engine_.match_right(j); }
  std::uint64_t step() const { return engine_.step(); }
  std::map<Index, IndexList> committed() const { return engine_.committed_prefix().committed.stars; }

 private:
  PyEngine(BipartiteOracle o, unsigned k, HWitness h, std::size_t max_ball)
      : engine_(std::move(o), k, std::move(h), EngineOptions{max_ball}) {}
  HaremEngine engine_;
};

}  // namespace

PYBIND11_MODULE(_harem, m) {
  m.doc() = "Computable perfect (1,k)-matchings and paradoxical decompositions";

  auto base = py::register_exception<Error>(m, "HaremError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<CEHHCViolation>(m, "CEHHCViolation", base.ptr());
  py::register_exception<BallBudgetExceeded>(m, "BallBudgetExceeded", base.ptr());
  py::register_exception<SizeGuardError>(m, "SizeGuardError", base.ptr());

  py::class_<FiniteBipartiteGraph>(m, "Graph")
      .def_static("parse", &load_finite_graph_string, py::arg("text"))
      .def_static(
          "from_rows",
          [](const std::map<Index, IndexList>& rows) {
            return FiniteBipartiteGraph::from_rows({rows.begin(), rows.end()});
          },
          py::arg("rows"))
      .def_property_readonly("left", &FiniteBipartiteGraph::left_ids)
      .def_property_readonly("right", &FiniteBipartiteGraph::right_ids)
      .def("neighbors", &FiniteBipartiteGraph::neighbors_of_left, py::arg("left"))
      .def("edge_count", &FiniteBipartiteGraph::edge_count)
      .def("dump", [](const FiniteBipartiteGraph& g) { return dump_finite_graph(g); });

  m.def(
      "solve_harem",
      [](const FiniteBipartiteGraph& g, unsigned k, std::optional<IndexList> rl,
         std::optional<IndexList> rr, IndexList opt) {
        return to_python(solve_harem(make_request(g, k, rl, rr, opt)));
      },
      py::arg("graph"), py::arg("k"), py::arg("required_left") = py::none(),
      py::arg("required_right") = py::none(), py::arg("optional_right") = IndexList{},
      "Canonical matching as {left: [rights]}, or None when infeasible.");
  m.def(
      "brute_force_harem",
      [](const FiniteBipartiteGraph& g, unsigned k) {
        std::vector<std::map<Index, IndexList>> out;
        for (auto& h : brute_force_harem(MatchingRequest::all_required(g, k))) out.push_back(h.stars);
        return out;
      },
      py::arg("graph"), py::arg("k"));
  m.def("check_hall_harem", &check_hall_harem, py::arg("graph"), py::arg("k"));
  m.def(
      "verify_matching",
      [](const FiniteBipartiteGraph& g, unsigned k, const std::map<Index, IndexList>& stars) {
        HaremMatching hm{stars};
        std::vector<std::string> out;
        for (const auto& v : verify_matching(MatchingRequest::all_required(g, k), hm).violations) {
          out.push_back(v.describe());
        }
        return out;
      },
      py::arg("graph"), py::arg("k"), py::arg("matching"),
      "Violation descriptions; empty when the matching is perfect.");

  m.def("reduce", [](unsigned rank, const std::string& w) { return format_word(parse_word(rank, w)); },
        py::arg("rank"), py::arg("word"));
  m.def("mul", [](unsigned rank, const std::string& x, const std::string& y) {
    return format_word(mul(parse_word(rank, x), parse_word(rank, y)));
  });
  m.def("inv", [](unsigned rank, const std::string& x) { return format_word(inv(parse_word(rank, x))); });
  m.def("index_to_word", [](unsigned rank, Index n) { return format_word(Enumeration(rank).index_to_word(n)); },
        py::arg("rank"), py::arg("index"));
  m.def("word_to_index",
        [](unsigned rank, const std::string& w) { return Enumeration(rank).word_to_index(parse_word(rank, w)); },
        py::arg("rank"), py::arg("word"));
  m.def("ball", [](unsigned rank, Index center, Index radius) {
    return ball(GeneratorSet::standard(rank), center, radius);
  }, py::arg("rank"), py::arg("center"), py::arg("radius"));
  m.def(
      "wbt_free",
      [](unsigned rank, const std::vector<std::string>& K) -> py::object {
        auto w = wbt_free(words(rank, K));
        if (!w) return py::none();
        return py::make_tuple(format_word(w->first), format_word(w->second));
      },
      py::arg("rank"), py::arg("K"));
  m.def(
      "folner_search",
      [](unsigned rank, const std::vector<std::string>& K, std::uint64_t n, Index ground_radius,
         std::size_t max_size) {
        return folner_search(words(rank, K), n, ball(GeneratorSet::standard(rank), 0, ground_radius),
                             max_size);
      },
      py::arg("rank"), py::arg("K"), py::arg("n"), py::arg("ground_radius"), py::arg("max_size"));

  py::class_<PyEngine>(m, "Engine")
      .def_static("free_group", &PyEngine::free_group, py::arg("mode") = "tight", py::arg("n") = 1,
                  py::arg("max_ball") = EngineOptions{}.max_ball_size)
      .def_static("finite", &PyEngine::finite, py::arg("graph"), py::arg("k"),
                  py::arg("max_ball") = EngineOptions{}.max_ball_size)
      .def("run_step", &PyEngine::run_step)
      .def("match_left", &PyEngine::match_left, py::arg("left"))
      .def("match_right", &PyEngine::match_right, py::arg("right"))
      .def_property_readonly("step", &PyEngine::step)
      .def("committed", &PyEngine::committed);

  m.def(
      "classic_rows",
      [](Index lo, Index hi) {
        ClassicF2Decomp d;
        std::ostringstream out;
        write_tsv_header(out);
        for (Index i = lo; i < hi; ++i) write_tsv_row(out, d.row(i));
        return out.str();
      },
      py::arg("lo"), py::arg("hi"), "TSV dump of the classic F2 decomposition on [lo, hi).");
  m.def(
      "verify_classic",
      [](Index window) {
        ClassicF2Decomp d;
        auto rep = verify_decomposition([&](Index i) { return d.theta1(i); },
                                        [&](Index i) { return d.theta2(i); },
                                        GeneratorSet::standard(2), window);
        return rep.pass();
      },
      py::arg("window"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line front end; returns (exit_code, stdout, stderr).");
}
