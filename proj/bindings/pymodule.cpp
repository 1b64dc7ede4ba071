#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weylflag/cli.hpp"
#include "weylflag/schubert.hpp"
#include "weylflag/serialize.hpp"
#include "weylflag/verify.hpp"

namespace py = pybind11;
using namespace weylflag;

namespace {

// Reports cross the boundary as plain dicts/lists/strings; every exact value
// already has a canonical string form, so nothing is ever rounded.
py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::object: {
            py::dict d;
            for (const auto& [k, v] : j.items()) d[py::str(k)] = json_to_py(v);
            return d;
        }
        case json::value_t::array: {
            py::list l;
            for (const auto& v : j) l.append(json_to_py(v));
            return l;
        }
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        default:
            return py::none();
    }
}

ArtinMatrix matrix_arg(const AlgPtr& alg, const std::vector<std::vector<std::string>>& rows) {
    json j = json::array();
    for (const auto& r : rows) j.push_back(r);
    return matrix_from_json(alg, j);
}

}  // namespace

PYBIND11_MODULE(weylflag, m) {
    m.doc() = "Exact Weyl-group / flag-variety combinatorics (string-exact API)";

    py::register_exception<DomainError>(m, "DomainError");

    m.def("length", [](const std::string& w) { return Permutation::parse(w).length(); });
    m.def("inverse",
          [](const std::string& w) { return Permutation::parse(w).inverse().to_string(); });
    m.def("compose", [](const std::string& a, const std::string& b) {
        return compose(Permutation::parse(a), Permutation::parse(b)).to_string();
    });
    m.def("bruhat_leq", [](const std::string& u, const std::string& w) {
        return bruhat_leq_checked(Permutation::parse(u), Permutation::parse(w));
    });

    m.def("is_good_pair", [](const std::string& w1, const std::string& w2) {
        auto r = is_good_pair_multi(MultiPermutation::parse(w1), MultiPermutation::parse(w2));
        py::dict d;
        d["good"] = r.good;
        d["certificate"] =
            r.certificate ? json_to_py(to_json(*r.certificate)) : py::object(py::none());
        return d;
    });
    m.def(
        "census",
        [](int n, int sigma, int bound) { return json_to_py(to_json(census(n, sigma, bound))); },
        py::arg("n"), py::arg("sigma") = 1, py::arg("bound") = 5);

    m.def("schubert_tangent_dim", [](const std::string& w, const std::string& tau) {
        return schubert_tangent_dim(Permutation::parse(w), Permutation::parse(tau));
    });
    m.def(
        "jacobian_oracle_tangent_dim",
        [](const std::string& w, const std::string& tau, int bound) {
            return jacobian_oracle_tangent_dim(Permutation::parse(w), Permutation::parse(tau),
                                               bound);
        },
        py::arg("w"), py::arg("tau"), py::arg("bound") = 4);

    m.def("dot_action", [](const std::string& w, const std::string& lam) {
        return dot_action(MultiPermutation::parse(w), WeightVector::parse(lam)).to_string();
    });
    m.def("weight_leq", [](const std::string& mu, const std::string& lam) {
        return weight_leq(WeightVector::parse(mu), WeightVector::parse(lam));
    });
    m.def("strongly_linked", [](const std::string& mu, const std::string& lam) {
        return json_to_py(
            to_json(strongly_linked(WeightVector::parse(mu), WeightVector::parse(lam))));
    });

    m.def("dim_xtri", &dim_xtri, py::arg("n"), py::arg("sigma"));
    m.def("d_invariant",
          [](const std::string& w) { return d_invariant(MultiPermutation::parse(w)); });
    m.def(
        "main_formula",
        [](int n, int sigma, const std::string& w, const std::string& wsat, const std::string& h,
           bool override_nongood) {
            return json_to_py(to_json(main_formula(n, sigma, MultiPermutation::parse(w),
                                                   MultiPermutation::parse(wsat),
                                                   HodgeTateWeights::parse(h), override_nongood)));
        },
        py::arg("n"), py::arg("sigma"), py::arg("w"), py::arg("wsat"), py::arg("h"),
        py::arg("override_nongood") = false);

    m.def("eigen_basis", [](const std::string& algebra,
                            const std::vector<std::vector<std::string>>& matrix,
                            const std::vector<std::string>& eigenvalues) {
        AlgPtr alg = TruncatedAlgebra::parse(algebra);
        std::vector<AlgElem> lams;
        for (const auto& s : eigenvalues) lams.push_back(AlgElem::parse(alg, s));
        return json_to_py(matrix_to_json(eigen_basis(matrix_arg(alg, matrix), lams)));
    });

    m.def("closed_cell_member", [](const std::string& algebra,
                                   const std::vector<std::vector<std::string>>& flag,
                                   const std::string& w) {
        AlgPtr alg = TruncatedAlgebra::parse(algebra);
        return closed_cell_member(FlagOverRing(matrix_arg(alg, flag)), Permutation::parse(w));
    });
    m.def("open_cell_member", [](const std::string& algebra,
                                 const std::vector<std::vector<std::string>>& flag,
                                 const std::string& w) {
        AlgPtr alg = TruncatedAlgebra::parse(algebra);
        return open_cell_member(FlagOverRing(matrix_arg(alg, flag)), Permutation::parse(w));
    });

    m.def(
        "verify",
        [](const std::string& suite, unsigned seed) {
            py::list out;
            for (const auto& r : run_suite(suite, seed)) {
                py::dict d;
                d["id"] = r.id;
                d["name"] = r.name;
                d["pass"] = r.pass;
                d["detail"] = r.detail;
                d["millis"] = r.millis;
                out.append(d);
            }
            return out;
        },
        py::arg("suite") = "all", py::arg("seed") = 12345);
}
