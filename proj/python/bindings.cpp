#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tourvote/construct.hpp"
#include "tourvote/io.hpp"
#include "tourvote/oracle.hpp"
#include "tourvote/transitive.hpp"

namespace py = pybind11;
using namespace tourvote;

namespace {

Tournament tournament_from_matrix(const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::uint8_t> beats;
  beats.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw InvalidTournamentError("beats matrix must be square");
    for (int x : row) beats.push_back(static_cast<std::uint8_t>(x != 0 ? 1 : 0));
  }
  return Tournament(n, std::move(beats));
}

std::vector<std::vector<int>> tournament_matrix(const Tournament& t) {
  std::vector<std::vector<int>> m(t.size(), std::vector<int>(t.size(), 0));
  for (Vertex i = 0; i < t.size(); ++i) {
    for (Vertex j = 0; j < t.size(); ++j) m[i][j] = t.beats(i, j) ? 1 : 0;
  }
  return m;
}

std::vector<std::vector<Vertex>> profile_rows(const Profile& p) {
  std::vector<std::vector<Vertex>> rows;
  for (const auto& r : p.voters()) rows.emplace_back(r.begin(), r.end());
  return rows;
}

py::dict partition_dict(const SegmentPartition& s) {
  py::dict d;
  d["a"] = s.a;
  d["b"] = s.b;
  d["gamma"] = s.gamma;
  d["delta"] = s.delta;
  d["sigma"] = s.sigma;
  d["mu"] = s.mu;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Majority realization of tournaments by voters with transitive preferences";

  py::register_exception<MalformedProfileError>(m, "MalformedProfileError", PyExc_ValueError);
  py::register_exception<TieError>(m, "TieError", PyExc_ValueError);
  py::register_exception<OrientationError>(m, "OrientationError", PyExc_ValueError);
  py::register_exception<ParityError>(m, "ParityError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
  py::register_exception<BudgetExceededError>(m, "BudgetExceededError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Tournament>(m, "Tournament")
      .def(py::init(&tournament_from_matrix), py::arg("matrix"),
           "Square 0/1 matrix with m[i][j] = 1 iff i beats j.")
      .def_static("from_order",
                  [](std::vector<Vertex> order) { return Tournament::from_order(Ranking(order)); })
      .def_property_readonly("n", &Tournament::size)
      .def("__len__", &Tournament::size)
      .def("beats", &Tournament::beats)
      .def("out_degrees", &Tournament::out_degrees)
      .def("matrix", &tournament_matrix)
      .def(py::self == py::self)
      .def("__repr__", [](const Tournament& t) {
        return "Tournament(n=" + std::to_string(t.size()) + ")";
      });

  py::class_<Profile>(m, "Profile")
      .def(py::init([](std::size_t n, const std::vector<std::vector<Vertex>>& rows) {
             return Profile::from_rows(n, rows);
           }),
           py::arg("n"), py::arg("voters"))
      .def_property_readonly("n", &Profile::candidates)
      .def_property_readonly("voters", &profile_rows)
      .def("__len__", &Profile::size)
      .def(py::self == py::self)
      .def("__repr__", [](const Profile& p) {
        return "Profile(n=" + std::to_string(p.candidates()) +
               ", voters=" + std::to_string(p.size()) + ")";
      });

  m.def("margins", [](const Profile& p) {
    const auto mm = margins(p);
    std::vector<std::vector<int>> out(mm.size(), std::vector<int>(mm.size()));
    for (Vertex i = 0; i < mm.size(); ++i) {
      for (Vertex j = 0; j < mm.size(); ++j) out[i][j] = mm(i, j);
    }
    return out;
  });
  m.def("majority_pattern", &majority_pattern);
  m.def(
      "restrict",
      [](const Tournament& t, const std::vector<Vertex>& keep) {
        auto r = restrict(t, keep);
        return py::make_tuple(std::move(r.value), r.map.kept());
      },
      "Induced subtournament and the host label of each new vertex.");
  m.def("restrict", [](const Profile& p, const std::vector<Vertex>& keep) {
    auto r = restrict(p, keep);
    return py::make_tuple(std::move(r.value), r.map.kept());
  });
  m.def("is_transitive", [](const Tournament& t) {
    auto r = is_transitive(t);
    py::object cycle = py::none();
    if (r.cycle) cycle = py::make_tuple((*r.cycle)[0], (*r.cycle)[1], (*r.cycle)[2]);
    return py::make_tuple(r.transitive, r.order, cycle);
  });
  m.def("random_tournament", &random_tournament, py::arg("n"), py::arg("seed"));

  m.def("greedy_transitive_chain",
        [](const Tournament& t) { return greedy_transitive_chain(t).vertices; });
  m.def(
      "max_transitive_exhaustive",
      [](const Tournament& t, std::size_t n_cap) {
        return max_transitive_exhaustive(t, n_cap).vertices;
      },
      py::arg("t"), py::arg("n_cap") = kDefaultExhaustiveCap);

  m.def("segment_partition", [](const Tournament& t, Vertex a, Vertex b) {
    return partition_dict(segment_partition(t, a, b));
  });
  m.def("extend_pair", &extend_pair, py::arg("t_ext"), py::arg("a"), py::arg("b"),
        py::arg("p_old"));
  m.def("synthesize", [](const Tournament& t) {
    auto syn = synthesize(t);
    const auto& rep = syn.report;
    py::dict report;
    report["base_chain"] = rep.base_chain.vertices;
    report["greedy_chain"] = rep.greedy_chain.vertices;
    report["base_trimmed"] = rep.base_trimmed;
    report["steps"] = rep.steps;
    report["final_size"] = rep.final_size;
    report["bound"] = rep.bound;
    report["k"] = rep.k;
    return py::make_tuple(std::move(syn.profile), report);
  });
  m.def("mcgarvey_baseline", &mcgarvey_baseline);
  m.def("voter_bound", &voter_bound);

  m.def(
      "min_voters_exact",
      [](const Tournament& t, std::size_t n_cap, std::uint64_t budget) {
        auto res = min_voters_exact(t, OracleOptions{n_cap, budget});
        py::dict d;
        d["min_voters"] = res.min_voters;
        d["witness"] = std::move(res.witness);
        d["sizes_searched"] = res.sizes_searched;
        return d;
      },
      py::arg("t"), py::arg("n_cap") = OracleOptions{}.n_cap,
      py::arg("budget") = OracleOptions{}.budget);
  m.def("max_v_exact", [](std::size_t n) {
    auto res = max_v_exact(n);
    return py::make_tuple(res.v, std::move(res.worst));
  });

  m.def("parse_tournament", [](const std::string& text) {
    auto f = parse_tournament(text);
    return py::make_tuple(std::move(f.tournament), f.labels.names());
  });
  m.def(
      "format_tournament",
      [](const Tournament& t, std::optional<std::vector<std::string>> labels) {
        return labels ? format_tournament(t, LabelTable(std::move(*labels)))
                      : format_tournament(t);
      },
      py::arg("t"), py::arg("labels") = py::none());
  m.def("parse_votes", [](const std::string& text, std::vector<std::string> labels) {
    return parse_votes(text, LabelTable(std::move(labels)));
  });
  m.def(
      "format_votes",
      [](const Profile& p, std::optional<std::vector<std::string>> labels) {
        return labels ? format_votes(p, LabelTable(std::move(*labels))) : format_votes(p);
      },
      py::arg("p"), py::arg("labels") = py::none());
}
