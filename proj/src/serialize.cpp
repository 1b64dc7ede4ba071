#include "weylflag/serialize.hpp"

#include <sstream>

#include "weylflag/schubert.hpp"

namespace weylflag {

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

json mp_to_json(const MultiPermutation& w) {
    json arr = json::array();
    for (const auto& c : w.comps()) arr.push_back(c.to_string());
    return arr;
}

MultiPermutation mp_from_json(const json& j) {
    if (j.is_string()) return MultiPermutation::parse(j.get<std::string>());
    std::vector<Permutation> comps;
    for (const auto& s : j) comps.push_back(Permutation::parse(s.get<std::string>()));
    return MultiPermutation(comps);
}

json weight_to_json(const WeightVector& lam) {
    json arr = json::array();
    for (int t = 1; t <= lam.sigma(); ++t) {
        json row = json::array();
        for (int i = 1; i <= lam.n(); ++i) row.push_back(rat_str(lam.entry(t, i)));
        arr.push_back(row);
    }
    return arr;
}

WeightVector weight_from_json(const json& j) {
    std::vector<QVec> rows;
    for (const auto& jr : j) {
        QVec row;
        for (const auto& s : jr) row.push_back(parse_rat(s.get<std::string>()));
        rows.push_back(row);
    }
    return WeightVector(rows);
}

json to_json(const CensusReport& r) {
    json j;
    j["n"] = r.n;
    j["sigma"] = r.sigma;
    j["comparable_pairs"] = r.comparable_pairs;
    j["good"] = r.good;
    j["bad"] = r.bad;
    json pairs = json::array();
    for (const auto& [w1, w2] : r.bad_pairs)
        pairs.push_back(json{{"w1", w1.to_string()}, {"w2", w2.to_string()}});
    j["bad_pairs"] = pairs;
    return j;
}

CensusReport census_from_json(const json& j) {
    CensusReport r;
    r.n = j.at("n").get<int>();
    r.sigma = j.at("sigma").get<int>();
    r.comparable_pairs = j.at("comparable_pairs").get<long long>();
    r.good = j.at("good").get<long long>();
    r.bad = j.at("bad").get<long long>();
    for (const auto& p : j.at("bad_pairs"))
        r.bad_pairs.emplace_back(MultiPermutation::parse(p.at("w1").get<std::string>()),
                                 MultiPermutation::parse(p.at("w2").get<std::string>()));
    return r;
}

std::string census_csv(const CensusReport& r) {
    std::ostringstream out;
    out << "n,sigma,w1,w2\n";
    for (const auto& [w1, w2] : r.bad_pairs)
        out << r.n << "," << r.sigma << ",\"" << w1.to_string() << "\",\"" << w2.to_string()
            << "\"\n";
    return out.str();
}

json to_json(const Root& r) { return json{{"tau", r.tau}, {"i", r.i}, {"j", r.j}}; }

Root root_from_json(const json& j) {
    return Root{j.at("tau").get<int>(), j.at("i").get<int>(), j.at("j").get<int>()};
}

json to_json(const LinkageResult& r) {
    json chain = json::array();
    for (const auto& root : r.chain) chain.push_back(to_json(root));
    return json{{"linked", r.linked}, {"chain", chain}};
}

LinkageResult linkage_from_json(const json& j) {
    LinkageResult r;
    r.linked = j.at("linked").get<bool>();
    for (const auto& c : j.at("chain")) r.chain.push_back(root_from_json(c));
    return r;
}

json to_json(const GoodPairCertificate& c) {
    json chain = json::array();
    for (const auto& root : c.chain) chain.push_back(to_json(root));
    return json{{"chain", chain}, {"start", mp_to_json(c.start)}, {"end", mp_to_json(c.end)}};
}

GoodPairCertificate certificate_from_json(const json& j) {
    GoodPairCertificate c;
    for (const auto& r : j.at("chain")) c.chain.push_back(root_from_json(r));
    c.start = mp_from_json(j.at("start"));
    c.end = mp_from_json(j.at("end"));
    return c;
}

json to_json(const FormulaReport& r) {
    json per = json::array();
    for (const auto& t : r.per_tau)
        per.push_back(json{{"tau", t.tau},
                           {"tangent_dim", t.tangent_dim},
                           {"length_w", t.length_w},
                           {"length_wsat", t.length_wsat}});
    json j;
    j["n"] = r.n;
    j["sigma"] = r.sigma;
    j["dim_xtri"] = r.dim_xtri;
    j["d_term"] = r.d_term;
    j["schubert_sum"] = r.schubert_sum;
    j["length_term"] = r.length_term;
    j["total"] = r.total;
    j["good_pair"] = r.good_pair;
    j["conjectural"] = r.conjectural;
    j["per_tau"] = per;
    return j;
}

FormulaReport formula_from_json(const json& j) {
    FormulaReport r;
    r.n = j.at("n").get<int>();
    r.sigma = j.at("sigma").get<int>();
    r.dim_xtri = j.at("dim_xtri").get<long long>();
    r.d_term = j.at("d_term").get<long long>();
    r.schubert_sum = j.at("schubert_sum").get<long long>();
    r.length_term = j.at("length_term").get<long long>();
    r.total = j.at("total").get<long long>();
    r.good_pair = j.at("good_pair").get<bool>();
    r.conjectural = j.at("conjectural").get<bool>();
    for (const auto& p : j.at("per_tau")) {
        PerTauTerm t;
        t.tau = p.at("tau").get<int>();
        t.tangent_dim = p.at("tangent_dim").get<int>();
        t.length_w = p.at("length_w").get<int>();
        t.length_wsat = p.at("length_wsat").get<int>();
        r.per_tau.push_back(t);
    }
    return r;
}

json matrix_to_json(const ArtinMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

ArtinMatrix matrix_from_json(const AlgPtr& alg, const json& j) {
    int rows = static_cast<int>(j.size());
    int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
    ArtinMatrix m(alg, rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j.at(i).size()) != cols)
            throw std::invalid_argument("ragged matrix rows");
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = AlgElem::parse(alg, j.at(i).at(c).get<std::string>());
    }
    return m;
}

json to_json(const Refinement& r) {
    json lams = json::array();
    for (const auto& l : r.eigenvalues) lams.push_back(l.to_string());
    return json{{"algebra", r.basis.alg()->name()},
                {"basis", matrix_to_json(r.basis)},
                {"eigenvalues", lams}};
}

Refinement refinement_from_json(const AlgPtr& alg, const json& j) {
    Refinement r;
    r.basis = matrix_from_json(alg, j.at("basis"));
    for (const auto& s : j.at("eigenvalues"))
        r.eigenvalues.push_back(AlgElem::parse(alg, s.get<std::string>()));
    return r;
}

std::string schubert_table_csv(int n, bool oracle) {
    std::ostringstream out;
    out << "w,tau,dim\n";
    for (const auto& w : all_permutations(n)) {
        for (const auto& tau : all_permutations(n)) {
            if (!bruhat_leq(tau, w)) continue;
            int dim = oracle ? jacobian_oracle_tangent_dim(w, tau) : schubert_tangent_dim(w, tau);
            out << "\"" << w.to_string() << "\",\"" << tau.to_string() << "\"," << dim << "\n";
        }
    }
    return out.str();
}

}  // namespace weylflag
