#include "weylflag/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "weylflag/serialize.hpp"
#include "weylflag/schubert.hpp"
#include "weylflag/verify.hpp"

namespace weylflag {

namespace {

json error_obj(const std::string& type, const std::string& msg) {
    return json{{"error", json{{"type", type}, {"message", msg}}}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Weyl-group / flag-variety combinatorics toolkit"};
    app.set_config("--config");
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* wenv = std::getenv("WEYLFLAG_WORKERS")) {
        char* end = nullptr;
        long v = std::strtol(wenv, &end, 10);
        if (end == wenv || *end != '\0' || v < 1 || v > 64) {
            err << "WEYLFLAG_WORKERS must be an integer in [1, 64]\n";
            return 2;
        }
        cfg.workers = static_cast<int>(v);
    }
    app.add_option("--workers", cfg.workers, "worker pool bound (sweeps are sequential today)")
        ->check(CLI::Range(1, 64));

    int n = 0, sigma = 1;
    std::string w_str, wsat_str, tau_str, h_str, mu_str, lam_str;
    std::string algebra_str = "Q", matrix_path, suite = "all";

    CLI::App* census_cmd = app.add_subcommand("census", "classify all Bruhat-comparable pairs");
    census_cmd->add_option("--n", n, "rank")->required();
    census_cmd->add_option("--sigma", sigma, "number of embeddings");
    census_cmd->add_option("--max-n", cfg.max_n, "enumeration bound");
    census_cmd->add_option("--max-sigma", cfg.max_sigma, "embedding bound");
    census_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));

    CLI::App* dim_cmd = app.add_subcommand("dim", "evaluate the tangent-dimension formula");
    dim_cmd->set_help_flag("--help", "print help");  // frees -h for the weight option
    dim_cmd->add_option("--n", n, "rank")->required();
    dim_cmd->add_option("--sigma", sigma, "number of embeddings")->required();
    dim_cmd->add_option("--w", w_str, "companion parameter, \"3,1,2;2,1,3\"")->required();
    dim_cmd->add_option("--wsat", wsat_str, "saturated parameter")->required();
    dim_cmd->add_option("--h", h_str, "weights, \"0,1,2;0,2,5\"")->required();
    dim_cmd->add_flag("--override", cfg.override_nongood,
                      "evaluate past a non-good pair (reported as conjectural)");

    CLI::App* schubert_cmd = app.add_subcommand("schubert", "tangent dimensions of cell closures");
    schubert_cmd->require_subcommand(1);
    CLI::App* tangent_cmd = schubert_cmd->add_subcommand("tangent", "one (w, tau) dimension");
    tangent_cmd->add_option("--n", n, "rank")->required();
    tangent_cmd->add_option("--w", w_str, "cell, one-line \"3,4,1,2\"")->required();
    tangent_cmd->add_option("--tau", tau_str, "base point, one-line")->required();
    tangent_cmd->add_flag("--oracle", cfg.oracle, "use the Jacobian rank instead of the count");
    CLI::App* table_cmd = schubert_cmd->add_subcommand("table", "full (w, tau) table as CSV");
    table_cmd->add_option("--n", n, "rank")->required();
    table_cmd->add_option("--max-n", cfg.max_n, "enumeration bound");
    table_cmd->add_flag("--oracle", cfg.oracle, "use the Jacobian rank instead of the count");

    CLI::App* linkage_cmd = app.add_subcommand("linkage", "strong linkage with certificate chain");
    linkage_cmd->add_option("--mu", mu_str, "lower weight, \"a,b;c,d\"")->required();
    linkage_cmd->add_option("--lam", lam_str, "upper weight")->required();

    CLI::App* artin_cmd = app.add_subcommand("artin", "exact arithmetic over truncated algebras");
    artin_cmd->require_subcommand(1);
    CLI::App* eigen_cmd = artin_cmd->add_subcommand("eigen", "eigenbasis over a local algebra");
    eigen_cmd->add_option("--algebra", algebra_str, "\"Q\", \"e^2\", \"e^2,f^3\"");
    eigen_cmd->add_option("--matrix", matrix_path, "JSON file {matrix, eigenvalues}")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "acceptance sweeps");
    verify_cmd->add_option("--suite", suite,
                           "all|census|tangent|flag-lemma|eigen|linkage|formula|bruhat");
    verify_cmd->add_option("--seed", cfg.seed, "seed for the randomized sweeps");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*census_cmd) {
            if (sigma < 1 || sigma > cfg.max_sigma)
                throw DomainError("census sigma out of bounds (raise --max-sigma)");
            CensusReport r = census(n, sigma, cfg.max_n);
            if (cfg.format == "csv")
                out << census_csv(r);
            else
                out << dump_json(to_json(r));
            return 0;
        }
        if (*dim_cmd) {
            MultiPermutation w = MultiPermutation::parse(w_str);
            MultiPermutation wsat = MultiPermutation::parse(wsat_str);
            HodgeTateWeights h = HodgeTateWeights::parse(h_str);
            FormulaReport rep = main_formula(n, sigma, w, wsat, h, cfg.override_nongood);
            out << dump_json(to_json(rep));
            return 0;
        }
        if (*tangent_cmd) {
            Permutation w = Permutation::parse(w_str);
            Permutation tau = Permutation::parse(tau_str);
            if (w.n() != n || tau.n() != n)
                throw DomainError("permutations do not match --n");
            int dim = cfg.oracle ? jacobian_oracle_tangent_dim(w, tau, cfg.max_oracle_n)
                                 : schubert_tangent_dim(w, tau);
            out << dump_json(json{{"dim", dim},
                                  {"method", cfg.oracle ? "jacobian" : "combinatorial"}});
            return 0;
        }
        if (*table_cmd) {
            if (n < 1 || n > cfg.max_n) throw DomainError("table bound exceeded (raise --max-n)");
            if (cfg.oracle && n > cfg.max_oracle_n)
                throw DomainError("Jacobian sweeps are bounded at n = " +
                                  std::to_string(cfg.max_oracle_n));
            out << schubert_table_csv(n, cfg.oracle);
            return 0;
        }
        if (*linkage_cmd) {
            WeightVector mu = WeightVector::parse(mu_str);
            WeightVector lam = WeightVector::parse(lam_str);
            out << dump_json(to_json(strongly_linked(mu, lam)));
            return 0;
        }
        if (*eigen_cmd) {
            AlgPtr alg = TruncatedAlgebra::parse(algebra_str);
            std::ifstream in(matrix_path);
            if (!in) throw DomainError("cannot open " + matrix_path);
            json jm = json::parse(in);
            ArtinMatrix f = matrix_from_json(alg, jm.at("matrix"));
            std::vector<AlgElem> lams;
            for (const auto& s : jm.at("eigenvalues"))
                lams.push_back(AlgElem::parse(alg, s.get<std::string>()));
            ArtinMatrix basis = eigen_basis(f, lams);
            json lamj = json::array();
            for (const auto& l : lams) lamj.push_back(l.to_string());
            out << dump_json(json{{"algebra", alg->name()},
                                  {"basis", matrix_to_json(basis)},
                                  {"eigenvalues", lamj}});
            return 0;
        }
        if (*verify_cmd) {
            auto results = run_suite(suite, cfg.seed);
            bool all = true;
            for (const auto& r : results) {
                out << r.line() << "\n";
                all = all && r.pass;
            }
            out << (all ? "verify: all suites passed" : "verify: FAILURES") << " (" << results.size()
                << " run)\n";
            return all ? 0 : 1;
        }
    } catch (const DomainError& e) {
        out << dump_json(error_obj("domain", e.what()));
        return 1;
    } catch (const std::invalid_argument& e) {
        out << dump_json(error_obj("domain", e.what()));
        return 1;
    } catch (const json::exception& e) {
        out << dump_json(error_obj("input", e.what()));
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace weylflag
