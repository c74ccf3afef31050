// Python bindings for the census engine: lattice arithmetic, catalog access,
// pair classification, invariants, and the three censuses.
#include "g2census/census.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

namespace py = pybind11;
using namespace g2census;

namespace pybind11::detail {

// Exact big integers cross the boundary as Python ints via decimal strings.
template <>
struct type_caster<Int> {
  public:
    PYBIND11_TYPE_CASTER(Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        PyObject* s = PyObject_Str(src.ptr());
        if (!s) return false;
        value = Int(py::cast<std::string>(py::handle(s)));
        Py_DECREF(s);
        return true;
    }

    static handle cast(const Int& v, return_value_policy, handle) {
        return handle(PyLong_FromString(v.str().c_str(), nullptr, 10));
    }
};

}  // namespace pybind11::detail

namespace {

Lattice lattice_from_rows(const std::vector<std::vector<Int>>& rows) {
    return Lattice::from_gram(Mat(rows.begin(), rows.end()));
}

py::dict topology_dict(const TcsTopology& t) {
    py::dict d;
    d["b2"] = t.b2;
    d["b3"] = t.b3;
    d["d"] = t.d;
    d["d_hat"] = t.d_hat;
    d["mu"] = t.mu;
    d["tor_h3"] = t.tor_h3.str();
    d["tor_h4"] = t.tor_h4.str();
    d["two_connected"] = t.two_connected;
    return d;
}

py::dict row_dict(const CensusRow& r) {
    py::dict d;
    d["pair_plus"] = r.plus_id;
    d["pair_minus"] = r.minus_id;
    d["match_class"] = r.match_class;
    d["A_sq_plus"] = r.A_sq_plus ? py::cast(*r.A_sq_plus) : py::none();
    d["A_sq_minus"] = r.A_sq_minus ? py::cast(*r.A_sq_minus) : py::none();
    d["B_sq"] = r.B_sq ? py::cast(*r.B_sq) : py::none();
    d["topology"] = topology_dict(r.top);
    d["status"] = r.status;
    d["notes"] = r.notes;
    return d;
}

}  // namespace

PYBIND11_MODULE(_g2census, m) {
    m.doc() = "Exact-arithmetic census of twisted-connected-sum invariants over the "
              "rank 1/2 Fano building-block catalog";

    py::register_exception<Error>(m, "CensusError");

    py::class_<Lattice>(m, "Lattice")
        .def(py::init(&lattice_from_rows), py::arg("gram"))
        .def_property_readonly("rank", &Lattice::rank)
        .def_property_readonly("gram",
                               [](const Lattice& l) {
                                   std::vector<std::vector<Int>> out;
                                   for (const auto& row : l.gram) out.emplace_back(row);
                                   return out;
                               })
        .def("inner", &Lattice::inner)
        .def("norm", &Lattice::norm);

    m.def("det_gram", &det_gram);
    m.def("signature", &signature);
    m.def("is_even", &is_even);
    m.def("discriminant_group",
          [](const Lattice& l) { return discriminant_group(l).invariant_factors; });
    m.def("discriminant_group_str",
          [](const Lattice& l) { return discriminant_group(l).str(); });
    m.def("orth_complement_of_vector", &orth_complement_of_vector);
    m.def("index_of_sublattice", &index_of_sublattice);
    m.def(
        "fundamental_min",
        [](const Lattice& l, const Vec& h) {
            MinResult r = fundamental_min(l, h);
            return py::make_tuple(r.min, r.witness);
        },
        py::arg("lattice"), py::arg("h"));
    m.def("vectors_with", &vectors_with, py::arg("lattice"), py::arg("h"), py::arg("d"),
          py::arg("n"));
    m.def("prime_index_overlattices", [](const Lattice& l, const Int& p) {
        py::list out;
        for (const Overlattice& o : prime_index_overlattices(l, p)) {
            py::dict d;
            std::vector<std::vector<Int>> g;
            for (const auto& row : o.new_gram) g.emplace_back(row);
            d["gram"] = g;
            d["index"] = o.index;
            d["glue"] = o.glue;
            d["glue_norm"] = o.glue_norm;
            out.append(d);
        }
        return out;
    });
    m.def("d_hat", &d_hat);

    py::class_<Catalog>(m, "Catalog")
        .def_property_readonly("warnings", [](const Catalog& c) { return c.warnings; })
        .def_property_readonly("rank1_names",
                               [](const Catalog& c) {
                                   std::vector<std::string> names;
                                   for (const auto& e : c.rank1) names.push_back(e.name);
                                   return names;
                               })
        .def("rank2_gram",
             [](const Catalog& c, int mm) {
                 std::vector<std::vector<Int>> g;
                 for (const auto& row : c.by_mm(mm).gram) g.emplace_back(row);
                 return g;
             })
        .def("rank2_c2", [](const Catalog& c, int mm) { return c.by_mm(mm).c2; })
        .def("rank2_b3_Z", [](const Catalog& c, int mm) { return c.by_mm(mm).b3_Z; })
        .def("block_ids", [](const Catalog& c) {
            std::vector<std::string> ids;
            for (const auto& b : census_blocks(c)) ids.push_back(block_id(c, b));
            return ids;
        });

    m.def("load_catalog", &load_catalog, py::arg("data_dir"));
    m.def("validate_catalog", [](const Catalog& c) {
        CheckReport rep = validate_catalog(c);
        py::dict d;
        d["ok"] = rep.ok();
        d["passed"] = rep.passed.size();
        d["failures"] = rep.failures;
        d["warnings"] = rep.warnings;
        return d;
    });

    m.def("census_perp", [](const Catalog& c) {
        PerpCensus pc = census_perp(c);
        py::dict d;
        py::list rows;
        for (const auto& r : pc.rows) rows.append(row_dict(r));
        d["rows"] = rows;
        py::dict hist;
        for (const auto& [key, count] : pc.hist.cells)
            hist[py::make_tuple(key.first, key.second)] = count;
        d["histogram"] = hist;
        d["distinct_manifolds"] = pc.distinct_manifolds;
        d["distinct_b3"] = pc.distinct_b3;
        return d;
    });
    m.def("census_orth", [](const Catalog& c) {
        py::list rows;
        for (const auto& r : census_orth(c).rows) rows.append(row_dict(r));
        return rows;
    });
    m.def(
        "census_skew",
        [](const Catalog& c, bool mu_filter) {
            py::list rows;
            for (const auto& r : census_skew(c, mu_filter).rows) rows.append(row_dict(r));
            return rows;
        },
        py::arg("catalog"), py::arg("mu_nonzero") = false);
    m.def("exotic_report", [](const Catalog& c) {
        ExoticReport rep = exotic_report(c);
        py::list types;
        for (const auto& t : rep.types) {
            py::dict d;
            d["b3"] = t.b3;
            d["d"] = t.d;
            d["mu"] = t.mu;
            d["perp_partner_count"] = t.perp_partner_count;
            types.append(d);
        }
        py::list pairs;
        for (const auto& [b3, dd] : rep.homeo_pairs) pairs.append(py::make_tuple(b3, dd));
        py::dict out;
        out["types"] = types;
        out["homeo_not_diffeo"] = pairs;
        return out;
    });
    m.def("exotic_text", [](const Catalog& c) { return exotic_text(exotic_report(c)); });
}
