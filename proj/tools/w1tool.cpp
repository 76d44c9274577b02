// Batch front end for the level-1 weight bound library. Every subcommand is
// deterministic for a fixed flag set, including seeds, and emits CSV tables,
// key-value reports, or JSON.
//
// Exit codes: 0 success / checks pass, 1 a verification failed, 2 usage error.

#include "w1/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

namespace {

struct Output {
    std::unique_ptr<std::ofstream> file;
    std::ostream& stream() { return file ? *file : std::cout; }
};

Output open_output(const std::string& path) {
    Output out;
    if (!path.empty()) {
        out.file = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*out.file) throw CLI::ValidationError("--out", "cannot open " + path);
    }
    return out;
}

// dyadic density given as m with n, or as p/q
uint64_t parse_support_size(const std::string& a_str, int n) {
    w1::Rat a = w1::parse_rat(a_str);
    w1::Rat scaled = a * w1::Rat(w1::pow2(unsigned(n)), 1);
    if (scaled.den != 1)
        throw CLI::ValidationError("--a", "density must be dyadic with denominator 2^n");
    return scaled.num.convert_to<uint64_t>();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"level-1 Fourier weight bounds: tables, certification, exact search"};
    app.require_subcommand(1);

    double profile_t = 0.21;
    app.add_option("--T", profile_t, "profile threshold (default 0.21)");
    unsigned threads = 0;
    app.add_option("--threads", threads, "worker cap (results do not depend on it)");
    std::string out_path;
    app.add_option("--out", out_path, "output file (default stdout)");
    std::string format = "report";
    app.add_option("--format", format, "csv | report | json (where applicable)");

    // ---- bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "bound-comparison table over a density grid");
    double grid_step = 1e-3;
    cmd_bounds->add_option("--grid", grid_step, "grid step over (0, 1/2] (default 1e-3)");
    uint64_t strong_n = 1000;
    cmd_bounds->add_option("--strong-n", strong_n, "dimension for the strong-bound column");

    // ---- certify
    auto* cmd_certify = app.add_subcommand("certify", "verify the induction gap on its region");
    double cert_step = 1e-3;
    cmd_certify->add_option("--grid-step", cert_step, "grid step (default 1e-3, max 1e-3)");

    // ---- extremal
    auto* cmd_ext = app.add_subcommand("extremal", "exact max of W_1 at small dimension");
    int ext_n = 3;
    cmd_ext->add_option("--n", ext_n, "dimension")->required();
    std::string ext_m, ext_a, ext_beta;
    cmd_ext->add_option("--m", ext_m, "support size");
    cmd_ext->add_option("--a", ext_a, "dyadic density p/q (alternative to --m)");
    cmd_ext->add_option("--beta", ext_beta, "restrict max |f_hat_i| to this rational");
    bool ext_override = false;
    cmd_ext->add_flag("--override-cap", ext_override,
                      "allow n > 4 (enumeration cost grows as C(2^n, m))");
    bool ext_table = false;
    cmd_ext->add_flag("--table", ext_table, "print (m, max W_1) for every m");
    int ltf_cap = 0;
    cmd_ext->add_option("--ltf-weight-cap", ltf_cap,
                        "run the threshold-function search with this weight cap instead");
    size_t max_maximizers = 16;
    cmd_ext->add_option("--max-maximizers", max_maximizers, "cap on recorded ties");

    // ---- fkn
    auto* cmd_fkn = app.add_subcommand("fkn", "balanced-function bound vs exact values");
    int fkn_n = 4;
    cmd_fkn->add_option("--n", fkn_n, "dimension for the exact sweep (<= 4)");
    std::string fkn_beta;
    cmd_fkn->add_option("--beta", fkn_beta, "evaluate the bound at one rational beta");

    // ---- chang
    auto* cmd_chang = app.add_subcommand("chang", "dimension bounds and sharp thresholds");
    std::vector<std::string> opt_sharp, opt_ball, opt_dim, opt_l6;
    cmd_chang->add_option("--sharp-eps", opt_sharp, "k a: largest eps at dimension k, mean a")
        ->expected(2);
    cmd_chang->add_option("--ball-eps", opt_ball, "k r: ball threshold C(k-1,r)/C(k,<=r)")
        ->expected(2);
    cmd_chang->add_option("--dim-bound", opt_dim, "a eps: entropy dimension bound")->expected(2);
    cmd_chang->add_option("--lemma6", opt_l6, "a eps: weight-based dimension bound")->expected(2);
    int chang_sweep = 0;
    cmd_chang->add_option("--sweep", chang_sweep, "exhaustive check at this dimension (<= 4)");
    std::string spec_file;
    cmd_chang->add_option("--spec-set", spec_file, "support file (one index per line)");
    int spec_n = 0;
    cmd_chang->add_option("--spec-n", spec_n, "dimension for --spec-set");
    std::string spec_eps;
    cmd_chang->add_option("--spec-eps", spec_eps, "epsilon p/q for --spec-set");

    // ---- euclid-mc
    auto* cmd_mc = app.add_subcommand("euclid-mc", "Monte-Carlo average distance of a ball");
    int mc_dim = 2;
    cmd_mc->add_option("--dim", mc_dim, "dimension");
    std::string mc_center = "0,0";
    cmd_mc->add_option("--center", mc_center, "comma-separated center coordinates");
    double mc_measure = 0.5;
    cmd_mc->add_option("--measure", mc_measure, "Gaussian measure of the ball");
    uint64_t mc_samples = 1000000;
    cmd_mc->add_option("--samples", mc_samples, "sample count");
    uint64_t mc_seed = 1;
    cmd_mc->add_option("--seed", mc_seed, "RNG seed");

    // ---- asymptotics
    auto* cmd_asy = app.add_subcommand("asymptotics", "log-scale behavior at a = e^-t");
    double asy_t = 20.0;
    cmd_asy->add_option("--t", asy_t, "t in a = e^-t");
    uint64_t asy_n = 1000000;
    cmd_asy->add_option("--strong-n", asy_n, "dimension for the strong/chang ratio");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        w1::ProfileParams params = w1::ProfileParams::make(profile_t);
        Output out = open_output(out_path);
        std::ostream& os = out.stream();

        if (*cmd_bounds) {
            std::vector<double> grid;
            for (double a = grid_step; a <= 0.5 + 1e-15; a += grid_step)
                grid.push_back(std::min(a, 0.5));
            w1::BoundTableOptions opt;
            opt.strong_n = strong_n;
            w1::BoundReport rep = w1::bound_table(grid, params, opt);
            w1::write_bound_csv(os, rep);
            return rep.sandwich_ok ? 0 : 1;
        }

        if (*cmd_certify) {
            w1::CertReport rep = w1::verify_region(cert_step, params, threads);
            if (format == "json") os << w1::cert_to_json(rep).dump(2) << "\n";
            else w1::write_cert_report(os, rep);
            return rep.pass ? 0 : 1;
        }

        if (*cmd_ext) {
            w1::SearchOptions opt;
            opt.override_cap = ext_override;
            opt.max_maximizers = max_maximizers;
            if (ltf_cap > 0) {
                if (ext_m.empty() && ext_a.empty())
                    throw CLI::ValidationError("--m", "need --m or --a");
                uint64_t m = ext_m.empty() ? parse_support_size(ext_a, ext_n)
                                           : std::stoull(ext_m);
                w1::LtfResult r = w1::ltf_search(ext_n, m, ltf_cap);
                os << "n: " << r.n << "\nm: " << r.m << "\n";
                os << "w1_lower_bound: " << r.exact.str() << " = " << w1::fmt17(r.w1) << "\n";
                os << "weights:";
                for (int wgt : r.weights) os << " " << wgt;
                os << "\nsupport:";
                for (uint32_t p : r.support) os << " " << p;
                os << "\n";
                return 0;
            }
            if (ext_table) {
                for (auto& [m, rat] : w1::monotonicity_table(ext_n, opt))
                    os << m << "," << rat.str() << "," << w1::fmt17(rat.to_double()) << "\n";
                return 0;
            }
            if (ext_m.empty() && ext_a.empty())
                throw CLI::ValidationError("--m", "need --m or --a");
            uint64_t m = ext_m.empty() ? parse_support_size(ext_a, ext_n) : std::stoull(ext_m);
            w1::ExtremalResult res;
            if (!ext_beta.empty()) {
                w1::Rat beta = w1::parse_rat(ext_beta);
                res = w1::exact_max_w1_given_beta(ext_n, m, beta.num.convert_to<long long>(),
                                                  beta.den.convert_to<long long>(), opt);
            } else {
                res = w1::exact_max_w1(ext_n, m, opt);
            }
            if (format == "json") os << w1::extremal_to_json(res).dump(2) << "\n";
            else w1::write_extremal_report(os, res);
            return 0;
        }

        if (*cmd_fkn) {
            if (!fkn_beta.empty()) {
                double b = w1::parse_rat(fkn_beta).to_double();
                os << "fkn_bound: " << w1::fmt17(w1::fkn_bound(b, params)) << "\n";
                os << "khintchine_bound: " << w1::fmt17(w1::khintchine_bound(b)) << "\n";
                return 0;
            }
            if (fkn_n < 1 || fkn_n > 4)
                throw CLI::ValidationError("--n", "exact sweep needs n <= 4");
            uint64_t m = uint64_t(1) << (fkn_n - 1);
            os << "beta,exact_w1,fkn,khintchine\n";
            for (long long B = m % 2; B <= (long long)m; B += 2) {
                auto res = w1::exact_max_w1_given_beta(fkn_n, m, B, 1LL << fkn_n);
                if (!res.feasible) continue;
                double beta = double(B) / std::ldexp(1.0, fkn_n);
                os << w1::fmt17(beta) << "," << w1::fmt17(res.w1) << ","
                   << w1::fmt17(w1::fkn_bound(beta, params)) << ","
                   << w1::fmt17(w1::khintchine_bound(beta)) << "\n";
            }
            return 0;
        }

        if (*cmd_chang) {
            if (!opt_sharp.empty()) {
                int k = std::stoi(opt_sharp[0]);
                os << w1::sharp_eps(k, w1::parse_rat(opt_sharp[1])).str() << "\n";
                return 0;
            }
            if (!opt_ball.empty()) {
                os << w1::ball_eps(std::stoi(opt_ball[0]), std::stoi(opt_ball[1])).str() << "\n";
                return 0;
            }
            if (!opt_dim.empty()) {
                os << w1::fmt17(w1::chang_dim_bound(w1::parse_rat(opt_dim[0]).to_double(),
                                                    w1::parse_rat(opt_dim[1]).to_double()))
                   << "\n";
                return 0;
            }
            if (!opt_l6.empty()) {
                os << w1::fmt17(w1::lemma6_bound(w1::parse_rat(opt_l6[0]).to_double(),
                                                 w1::parse_rat(opt_l6[1]).to_double(), params))
                   << "\n";
                return 0;
            }
            if (chang_sweep > 0) {
                std::vector<std::pair<int64_t, int64_t>> grid;
                for (int k = 1; k <= 9; ++k) grid.emplace_back(k, 10);
                auto res = w1::exhaustive_dim_check(chang_sweep, grid, params);
                os << "functions_checked: " << res.functions_checked << "\n";
                os << "pass: " << (res.ok ? "true" : "false") << "\n";
                if (!res.ok) os << "first_failure: " << res.first_failure << "\n";
                return res.ok ? 0 : 1;
            }
            if (!spec_file.empty()) {
                if (spec_n < 1) throw CLI::ValidationError("--spec-n", "dimension required");
                std::ifstream in(spec_file);
                if (!in) throw CLI::ValidationError("--spec-set", "cannot open " + spec_file);
                auto pts = w1::read_support(in);
                auto f = w1::BoolFun::from_support(spec_n, pts);
                w1::Rat eps = spec_eps.empty() ? w1::Rat(1, 2) : w1::parse_rat(spec_eps);
                auto set = w1::spec_set(f, eps.num.convert_to<int64_t>(),
                                        eps.den.convert_to<int64_t>());
                w1::write_spec_report(os, set);
                return 0;
            }
            throw CLI::ValidationError("chang", "pick one of the chang operations");
        }

        if (*cmd_mc) {
            std::vector<double> center;
            std::stringstream ss(mc_center);
            std::string tok;
            while (std::getline(ss, tok, ',')) center.push_back(std::stod(tok));
            auto est = w1::euclid_mc(mc_dim, center, mc_measure, mc_samples, mc_seed);
            w1::write_mc_report(os, est);
            return 0;
        }

        if (*cmd_asy) {
            auto la = w1::log_asymptotics(asy_t, params);
            double t = asy_t;
            os << "t: " << w1::fmt17(t) << "\n";
            os << "ln_chang: " << w1::fmt17(la.ln_chang) << "\n";
            os << "ln_ball: " << w1::fmt17(la.ln_ball) << "\n";
            os << "ln_chi: " << w1::fmt17(la.ln_chi) << "\n";
            double expJ = -2 * t + std::log(2 * t) - std::log(2 * M_PI) / (2 * t);
            double expchi =
                -2 * t + std::log(2 * t) - std::log(2 * M_PI / w1::sq(params.w)) / (2 * t);
            os << "ball_expansion_gap: " << w1::fmt17(la.ln_ball - expJ) << "\n";
            os << "chi_expansion_gap: " << w1::fmt17(la.ln_chi - expchi) << "\n";
            double a = 0.125;
            os << "strong_to_chang_ratio_at_1_8: "
               << w1::fmt17(w1::strong_bound(asy_n, a) / w1::chang_bound(a)) << "\n";
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
