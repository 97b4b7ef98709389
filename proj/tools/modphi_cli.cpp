// Command-line surface over the library: every estimator next to its oracle,
// structured JSON/CSV output, reproducible seeded randomness.

#include <algorithm>
#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "modphi/acceptance.hpp"
#include "modphi/deviation.hpp"
#include "modphi/erdosrenyi.hpp"
#include "modphi/errors.hpp"
#include "modphi/models.hpp"
#include "modphi/multidim.hpp"
#include "modphi/multigraph.hpp"
#include "modphi/setpartition.hpp"
#include "modphi/special.hpp"
#include "modphi/thoma.hpp"

using json = nlohmann::ordered_json;
using namespace modphi;

namespace {

json estimate_json(const DeviationEstimate& e) {
    return {{"regime", regime_name(e.regime)},
            {"log_prob", e.log_prob},
            {"prob", e.prob()},
            {"rate", e.exponent_rate},
            {"leading", e.leading},
            {"correction", e.correction},
            {"boundary_flag", e.boundary_flag}};
}

void emit(const json& config, const json& rows, const std::string& path) {
    json doc = {{"schema", 1}, {"config", config}, {"rows", rows}};
    if (path.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream out(path);
        out << doc.dump(2) << "\n";
    }
}

std::vector<double> parse_doubles(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

MultiGraph parse_edges(const std::string& spec) {
    // "1-2,2-3,1-3" with 1-based vertices; loops as "2-2"
    std::vector<std::pair<int, int>> edges;
    int maxv = 0;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto dash = tok.find('-');
        if (dash == std::string::npos) throw validation_error("edge must look like 1-2");
        int u = std::stoi(tok.substr(0, dash));
        int v = std::stoi(tok.substr(dash + 1));
        if (u < 1 || v < 1) throw validation_error("vertices are 1-based");
        maxv = std::max({maxv, u, v});
        edges.push_back({u - 1, v - 1});
    }
    return graph_from_edge_list(maxv, edges);
}

ReferenceLaw parse_custom_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open custom-spec file: " + path);
    std::vector<EtaTerm> terms;
    double strip = std::numeric_limits<double>::infinity();
    bool lattice = false;
    double span = 1.0;
    std::string line;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string key;
        if (!(ss >> key) || key[0] == '#') continue;
        if (key == "term") {
            EtaTerm t{};
            if (!(ss >> t.coeff >> t.zpow >> t.expmult))
                throw validation_error("term lines need: term <coeff> <zpow> <expmult>");
            terms.push_back(t);
        } else if (key == "strip") {
            ss >> strip;
        } else if (key == "lattice") {
            lattice = true;
            ss >> span;
        } else {
            throw validation_error("unknown custom-spec key: " + key);
        }
    }
    if (terms.empty()) throw validation_error("custom-spec file has no terms");
    return law_from_terms(terms, strip, lattice, span);
}

LimitingFunction psi_by_name(const std::string& kind, double L, int v, double theta,
                             std::uint32_t K) {
    if (kind == "one") return LimitingFunction::one();
    if (kind == "exp_monomial") return LimitingFunction::exp_monomial(L, v);
    if (kind == "inv_gamma_exp") return LimitingFunction::inv_gamma_exp();
    if (kind == "gamma_ratio") return LimitingFunction::gamma_ratio(theta);
    if (kind == "barnes_usp") return LimitingFunction::barnes_ratio(1.5);
    if (kind == "barnes_so") return LimitingFunction::barnes_ratio(0.5);
    if (kind == "barnes_cue") return LimitingFunction::barnes_cue_real();
    if (kind == "weierstrass_integers") return LimitingFunction::weierstrass(IndexSet::integers, K);
    if (kind == "weierstrass_primes") return LimitingFunction::weierstrass(IndexSet::primes, K);
    throw validation_error("unknown psi kind: " + kind);
}

// model file: "law = poisson 1.0", "t_n = 100", "psi = inv_gamma_exp" style keys
ModPhiModel parse_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open model file: " + path);
    std::string line;
    ModPhiModel m{poisson_law(1.0), 0.0, LimitingFunction::one(), {}, {}};
    bool have_law = false, have_t = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        std::stringstream val(line.substr(eq + 1));
        key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
        if (key == "law") {
            std::string name;
            val >> name;
            if (name == "poisson") {
                double lambda = 1;
                val >> lambda;
                m.law = poisson_law(lambda);
            } else if (name == "gaussian") {
                double mean = 0, var = 1;
                val >> mean >> var;
                m.law = gaussian_law(mean, var);
            } else if (name == "bernoulli") {
                double q = 0.5;
                val >> q;
                m.law = bernoulli_law(q);
            } else if (name == "exponential") {
                m.law = exponential_law();
            } else if (name == "custom") {
                std::string file;
                val >> file;
                m.law = parse_custom_spec(file);
            } else {
                throw validation_error("unknown law: " + name);
            }
            have_law = true;
        } else if (key == "t_n") {
            val >> m.t_n;
            have_t = true;
        } else if (key == "psi") {
            std::string kind;
            val >> kind;
            double L = 1, theta = 1;
            int v = 3;
            std::uint32_t K = 100000;
            if (kind == "exp_monomial") val >> L >> v;
            if (kind == "gamma_ratio") val >> theta;
            if (kind == "weierstrass_integers" || kind == "weierstrass_primes") val >> K;
            m.psi = psi_by_name(kind, L, v, theta, K);
        } else {
            throw validation_error("unknown model key: " + key);
        }
    }
    if (!have_law || !have_t) throw validation_error("model file needs law and t_n");
    if (m.t_n <= 0) throw validation_error("t_n must be positive");
    return m;
}

std::vector<Interval> parse_intervals(const std::string& spec) {
    // "a,b;c,d" with inf/-inf allowed
    std::vector<Interval> out;
    std::stringstream ss(spec);
    std::string part;
    auto num = [](const std::string& s) {
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        return std::stod(s);
    };
    while (std::getline(ss, part, ';')) {
        auto comma = part.find(',');
        if (comma == std::string::npos) throw validation_error("interval must look like a,b");
        out.push_back({num(part.substr(0, comma)), num(part.substr(comma + 1))});
    }
    return out;
}

PatternGraph pattern_by_name(const std::string& name, const std::string& custom_edges) {
    if (name == "edge") return pattern_edge();
    if (name == "triangle") return pattern_triangle();
    if (name == "path3") return pattern_path3();
    if (name == "custom") {
        MultiGraph g = parse_edges(custom_edges);
        std::vector<std::pair<int, int>> es(g.edges.begin(), g.edges.end());
        return pattern_from_edges(g.n, es);
    }
    throw validation_error("unknown pattern: " + name);
}

int run_cli(int argc, char** argv) {
    CLI::App app{"mod-phi deviation estimates with exact and Monte Carlo oracles"};
    app.require_subcommand(1);
    app.fallthrough(); // --out/--json may follow the subcommand
    std::string out_path;
    app.add_option("--out", out_path, "write JSON here instead of stdout");
    bool want_json = true;
    app.add_flag("--json", want_json, "JSON output (the default; CSV only via walk2d --csv)");

    // ---- legendre -----------------------------------------------------------
    auto* legendre = app.add_subcommand("legendre", "Legendre-Fenchel transform of a law");
    std::string leg_law = "gaussian", leg_custom;
    double leg_mean = 0, leg_var = 1, leg_lambda = 1;
    std::vector<double> leg_x;
    legendre->add_option("--law", leg_law, "gaussian | poisson | custom-spec");
    legendre->add_option("--custom-spec", leg_custom, "eta term file for --law custom-spec");
    legendre->add_option("--mean", leg_mean);
    legendre->add_option("--var", leg_var);
    legendre->add_option("--lambda", leg_lambda);
    legendre->add_option("--x", leg_x, "evaluation points")->required();

    // ---- psi ----------------------------------------------------------------
    auto* psi_cmd = app.add_subcommand("psi", "evaluate a limiting function");
    std::string psi_kind = "one";
    double psi_L = 1, psi_theta = 2;
    int psi_v = 3;
    std::uint32_t psi_K = 100000;
    std::vector<double> psi_z;
    psi_cmd->add_option("--kind", psi_kind)->required();
    psi_cmd->add_option("--L", psi_L);
    psi_cmd->add_option("--v", psi_v);
    psi_cmd->add_option("--theta", psi_theta);
    psi_cmd->add_option("--K", psi_K);
    psi_cmd->add_option("--z", psi_z, "point: re [im]")->expected(1, 2)->required();

    // ---- deviate --------------------------------------------------------------
    auto* deviate = app.add_subcommand("deviate", "deviation estimates for a model file");
    std::string dev_model, dev_kind = "tail", dev_intervals;
    double dev_x = 0, dev_y = 0, dev_T = 0, dev_alpha = 0, dev_sigma2 = 1, dev_L = 0;
    int dev_order = 0;
    deviate->add_option("--model", dev_model, "model file (law/t_n/psi keys)");
    deviate->add_option("--kind", dev_kind, "point | tail | crossover | cumulant | borel")
        ->required();
    deviate->add_option("--x", dev_x);
    deviate->add_option("--y", dev_y);
    deviate->add_option("--T", dev_T);
    deviate->add_option("--order", dev_order, "0 or 1 (point masses)");
    deviate->add_option("--intervals", dev_intervals, "borel set: \"a,b;c,inf\"");
    deviate->add_option("--alpha", dev_alpha, "cumulant model alpha_n");
    deviate->add_option("--sigma2", dev_sigma2, "cumulant model sigma^2");
    deviate->add_option("--L", dev_L, "cumulant model L");

    // ---- walk2d ----------------------------------------------------------------
    auto* walk = app.add_subcommand("walk2d", "conditioned simple walk, angle histogram");
    int walk_n = 400, walk_bins = 36;
    double walk_r = 0.4;
    std::int64_t walk_trials = 100000;
    std::uint64_t walk_seed = 0;
    std::string walk_csv;
    std::int64_t walk_budget = 10000000000LL;
    walk->add_option("--n", walk_n)->required();
    walk->add_option("--r", walk_r)->required();
    walk->add_option("--trials", walk_trials)->required();
    walk->add_option("--seed", walk_seed)->required();
    walk->add_option("--bins", walk_bins);
    walk->add_option("--csv", walk_csv, "write (bin, empirical, theoretical) rows");
    walk->add_option("--budget", walk_budget);

    // ---- conic -----------------------------------------------------------------
    auto* conic = app.add_subcommand("conic", "conic sector estimate, d = 2");
    double con_t = 25, con_b = 1, con_t1 = 0, con_t2 = kTwoPi;
    std::string con_psi = "one", con_model;
    conic->add_option("--model", con_model, "file with t_n/A/psi keys");
    conic->add_option("--t_n", con_t);
    conic->add_option("--b", con_b)->required();
    conic->add_option("--theta1", con_t1);
    conic->add_option("--theta2", con_t2);
    conic->add_option("--psi", con_psi, "one | dwalk");

    // ---- combi ------------------------------------------------------------------
    auto* combi = app.add_subcommand("combi", "set-partition and graph functionals");
    std::string combi_op, combi_edges, combi_blocks;
    int combi_N = 0, combi_D = 0, combi_r = 2;
    double combi_A = 1;
    combi->add_option("op", combi_op,
                      "mobius | cumulant | fh | st | identity | tutte | bound")
        ->required();
    combi->add_option("--edges", combi_edges, "edge list \"1-2,2-3\"");
    combi->add_option("--blocks", combi_blocks, "set partition \"1,2|3\"");
    std::string combi_moments;
    combi->add_option("--moments", combi_moments, "raw moments m_1,m_2,... for op cumulant");
    combi->add_option("--N", combi_N);
    combi->add_option("--D", combi_D);
    combi->add_option("--A", combi_A);
    combi->add_option("--r", combi_r);

    // ---- model ---------------------------------------------------------------------
    auto* model = app.add_subcommand("model", "concrete models with oracles");
    std::string model_name;
    long long model_n = 100;
    double model_beta = 0.5, model_h = 1e4, model_x = 0.75, model_theta = 2, model_z = 0.5;
    std::uint64_t model_seed = 0;
    std::int64_t model_trials = 0;
    bool model_compare = false;
    std::string model_plist;
    model->add_option("name", model_name, "cycles | bahadur | ising | zeros | wperm | omega | pb")
        ->required();
    model->add_option("--n", model_n);
    model->add_option("--beta", model_beta);
    model->add_option("--area", model_h, "hyperbolic area for zeros");
    model->add_option("--x", model_x);
    model->add_option("--theta", model_theta);
    model->add_option("--z", model_z);
    model->add_option("--seed", model_seed);
    model->add_option("--trials", model_trials);
    model->add_option("--p", model_plist, "comma-separated p_k for pb");
    model->add_flag("--compare", model_compare, "emit estimate-vs-oracle rows");

    // ---- er --------------------------------------------------------------------------
    auto* er = app.add_subcommand("er", "subgraph count statistics in G(n,p)");
    std::string er_op, er_pattern = "triangle", er_custom;
    int er_n = 30;
    double er_p = 0.5, er_v = 1.0;
    std::int64_t er_trials = 10000;
    std::uint64_t er_seed = 0;
    er->add_option("op", er_op, "count | cumulants | sigma | deviate | poly")->required();
    er->add_option("--pattern", er_pattern, "edge | triangle | path3 | custom");
    er->add_option("--edges", er_custom, "custom pattern edges");
    er->add_option("--n", er_n);
    er->add_option("--p", er_p);
    er->add_option("--v", er_v);
    er->add_option("--trials", er_trials);
    er->add_option("--seed", er_seed);

    // ---- thoma ------------------------------------------------------------------------
    auto* thoma = app.add_subcommand("thoma", "central measures and character cumulants");
    std::string thoma_op, thoma_alpha = "0.6,0.3", thoma_beta;
    int thoma_k = 2, thoma_n = 8;
    thoma->add_option("op", thoma_op, "measure | cumulants | limits")->required();
    thoma->add_option("--alpha", thoma_alpha);
    thoma->add_option("--beta", thoma_beta);
    thoma->add_option("--k", thoma_k);
    thoma->add_option("--n", thoma_n);

    // ---- suite -------------------------------------------------------------------------
    auto* suite = app.add_subcommand("suite", "acceptance suites");
    std::string suite_name = "all", suite_json;
    bool suite_fast = false;
    suite->add_option("name", suite_name,
                      "all | legendre | combinatorics | deviations | graphs | walk | models | "
                      "characters | a number 1..15");
    suite->add_flag("--fast", suite_fast, "reduced trials, doubled Monte Carlo tolerances");
    suite->add_option("--json", suite_json, "write a machine-readable report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the usage message
        return 2;    // validation failures exit 2, no partial output
    }

    // ---------------- dispatch ----------------
    if (*legendre) {
        ReferenceLaw law = leg_law == "gaussian"      ? gaussian_law(leg_mean, leg_var)
                           : leg_law == "poisson"     ? poisson_law(leg_lambda)
                           : leg_law == "custom-spec" ? parse_custom_spec(leg_custom)
                                                      : throw validation_error("unknown law");
        json rows = json::array();
        for (auto& lp : legendre_grid(law, leg_x))
            rows.push_back({{"x", lp.x}, {"h", lp.h}, {"F", lp.F}, {"Fp", lp.Fp}, {"Fpp", lp.Fpp}});
        emit({{"cmd", "legendre"}, {"law", leg_law}}, rows, out_path);
        return 0;
    }
    if (*psi_cmd) {
        auto psi = psi_by_name(psi_kind, psi_L, psi_v, psi_theta, psi_K);
        std::complex<double> z(psi_z[0], psi_z.size() > 1 ? psi_z[1] : 0.0);
        auto val = eval_psi(psi, z);
        emit({{"cmd", "psi"}, {"kind", psi_kind}},
             json::array({{{"re", val.real()}, {"im", val.imag()}}}), out_path);
        return 0;
    }
    if (*deviate) {
        json config = {{"cmd", "deviate"}, {"kind", dev_kind}};
        if (dev_kind == "cumulant") {
            CumulantModel cm{dev_alpha, 1.0, dev_sigma2, dev_L};
            emit(config, json::array({estimate_json(cumulant_moderate(cm, dev_T))}), out_path);
            return 0;
        }
        ModPhiModel m = parse_model_file(dev_model);
        config["model"] = dev_model;
        json rows = json::array();
        if (dev_kind == "point")
            rows.push_back(estimate_json(lattice_point_mass(m, dev_x, dev_order)));
        else if (dev_kind == "tail")
            rows.push_back(estimate_json(m.law.lattice ? lattice_tail(m, dev_x)
                                                       : nonlattice_tail(m, dev_x)));
        else if (dev_kind == "crossover")
            rows.push_back(estimate_json(crossover_tail(m, dev_y)));
        else if (dev_kind == "borel") {
            auto bb = borel_bound(m, parse_intervals(dev_intervals));
            rows.push_back({{"rate", bb.rate},
                            {"attained", bb.attained},
                            {"constant", bb.constant},
                            {"log_prob_bound", bb.log_prob_bound},
                            {"lower_bound_tight", bb.lower_bound_tight}});
        } else
            throw validation_error("unknown deviate kind: " + dev_kind);
        emit(config, rows, out_path);
        return 0;
    }
    if (*walk) {
        auto h = walk2d_conditional_mc(walk_n, walk_r, walk_trials, walk_seed, walk_bins, true,
                                       walk_budget);
        auto theo = walk2d_density_bins(walk_r > 0 ? walk_r : 1e-3, walk_bins);
        json config = {{"cmd", "walk2d"},       {"n", walk_n},       {"r", walk_r},
                       {"trials", walk_trials}, {"seed", walk_seed}, {"bins", walk_bins}};
        if (!walk_csv.empty()) {
            std::ofstream csv(walk_csv);
            csv << "# " << json(config).dump() << "\n";
            csv << "theta_bin,empirical,theoretical\n";
            char buf[128];
            for (int i = 0; i < walk_bins; ++i) {
                snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", i,
                         (double)h.counts[i] / std::max<std::int64_t>(1, h.accepted), theo[i]);
                csv << buf;
            }
        }
        json rows = json::array();
        for (int i = 0; i < walk_bins; ++i)
            rows.push_back(
                {{"bin", i},
                 {"empirical", (double)h.counts[i] / std::max<std::int64_t>(1, h.accepted)},
                 {"theoretical", theo[i]}});
        config["acceptance_rate"] = h.acceptance_rate();
        // the conditional-angle asymptotics are stated up to r = o(n^{1/12});
        // reported, not enforced
        config["within_stated_validity"] = walk_r <= std::pow((double)walk_n, 1.0 / 12.0);
        emit(config, rows, out_path);
        return 0;
    }
    if (*conic) {
        MultiModGaussianModel m;
        m.dimension = 2;
        m.A = {1, 0, 0, 1};
        m.t_n = con_t;
        if (!con_model.empty()) {
            std::ifstream in(con_model);
            if (!in) throw validation_error("cannot open conic model file: " + con_model);
            std::string line;
            while (std::getline(in, line)) {
                auto eq = line.find('=');
                if (eq == std::string::npos) continue;
                std::string key = line.substr(0, eq);
                std::stringstream val(line.substr(eq + 1));
                key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
                if (key == "t_n") val >> m.t_n;
                else if (key == "A") val >> m.A[0] >> m.A[1] >> m.A[2] >> m.A[3];
                else if (key == "psi") val >> con_psi;
                else throw validation_error("unknown conic model key: " + key);
            }
        }
        if (con_psi == "one")
            m.psi = [](const std::vector<double>&) { return 1.0; };
        else if (con_psi == "dwalk")
            m.psi = [](const std::vector<double>& z) { return dwalk_kurtosis_psi(2, z); };
        else
            throw validation_error("unknown conic psi");
        ConicSector s;
        s.dimension = 2;
        s.b = con_b;
        s.theta1 = con_t1;
        s.theta2 = con_t2;
        emit({{"cmd", "conic"}, {"t_n", con_t}, {"b", con_b}},
             json::array({estimate_json(conic_probability(m, s))}), out_path);
        return 0;
    }
    if (*combi) {
        json rows = json::array();
        if (combi_op == "mobius") {
            SetPartition pi;
            std::stringstream ss(combi_blocks);
            std::string block;
            while (std::getline(ss, block, '|')) {
                std::vector<int> b;
                std::stringstream bs(block);
                std::string v;
                while (std::getline(bs, v, ',')) b.push_back(std::stoi(v) - 1);
                pi.blocks.push_back(b);
            }
            rows.push_back({{"mobius", mobius(pi)}});
        } else if (combi_op == "cumulant") {
            auto kappas = cumulants_from_moments(parse_doubles(combi_moments));
            json ks = json::array();
            for (double k : kappas) ks.push_back(k);
            rows.push_back({{"cumulants", ks}});
        } else if (combi_op == "bound") {
            rows.push_back({{"bound", cumulant_bound(combi_N, combi_D, combi_A, combi_r)}});
        } else {
            MultiGraph g = parse_edges(combi_edges);
            if (combi_op == "fh")
                rows.push_back({{"F", f_functional(g)}});
            else if (combi_op == "st")
                rows.push_back({{"ST", spanning_tree_count(g)}});
            else if (combi_op == "identity") {
                auto [lhs, rhs] = bicolored_identity_check(g);
                rows.push_back({{"lhs", lhs}, {"rhs", rhs}, {"equal", lhs == rhs}});
            } else if (combi_op == "tutte")
                rows.push_back({{"T10", tutte_point(g, 1, 0)}, {"T11", tutte_point(g, 1, 1)}});
            else
                throw validation_error("unknown combi op: " + combi_op);
        }
        emit({{"cmd", "combi"}, {"op", combi_op}}, rows, out_path);
        return 0;
    }
    if (*model) {
        json rows = json::array();
        json config = {{"cmd", "model"}, {"name", model_name}, {"compare", model_compare}};
        if (model_name == "cycles") {
            auto d = cycles_exact(model_n);
            double t = std::log((double)model_n);
            ModPhiModel mm{poisson_law(1.0), t, LimitingFunction::inv_gamma_exp(), {}, {}};
            long long k = (long long)std::llround(2 * t);
            double x = (double)k / t;
            rows.push_back({{"n", model_n},
                            {"k", k},
                            {"mean", d.mean()},
                            {"estimate_point", lattice_point_mass(mm, x).prob()},
                            {"exact_point", d.point(k)},
                            {"estimate_tail", lattice_tail(mm, x).prob()},
                            {"exact_tail", d.tail_geq((double)k)}});
        } else if (model_name == "bahadur") {
            auto r = bahadur_rao_check(model_n, model_x, IidLaw::bernoulli_half);
            rows.push_back({{"estimate_point", r.estimate_point},
                            {"exact_point", r.exact_point},
                            {"ratio_point", r.ratio_point},
                            {"estimate_tail", r.estimate_tail},
                            {"exact_tail", r.exact_tail},
                            {"ratio_tail", r.ratio_tail}});
        } else if (model_name == "ising") {
            auto d = ising_exact(model_n, model_beta);
            double sigma2 = std::exp(model_beta);
            double threshold = model_x * std::pow((double)model_n, 0.75);
            CumulantModel cm{(double)model_n, 1.0, sigma2, 0.0};
            rows.push_back(
                {{"n", model_n},
                 {"beta", model_beta},
                 {"threshold", threshold},
                 {"estimate", cumulant_moderate(cm, threshold / std::sqrt(sigma2)).prob()},
                 {"exact", d.tail_geq(threshold)},
                 {"log_mgf_dp", d.log_mgf(model_z)},
                 {"log_mgf_eigen", ising_log_mgf(model_n, model_beta, model_z)}});
        } else if (model_name == "zeros") {
            if (!model->count("--seed")) throw validation_error("zeros needs --seed");
            std::int64_t draws = model_trials > 0 ? model_trials : 10000;
            double s = 0;
            for (std::int64_t i = 0; i < draws; ++i)
                s += (double)sample_hyperbolic_zeros(model_h, model_seed, (std::uint64_t)i);
            rows.push_back({{"h", model_h},
                            {"cgf_at_z", hyperbolic_zeros_cgf(model_h, model_z)},
                            {"mean_exact", hyperbolic_zeros_mean(model_h)},
                            {"mean_empirical", s / (double)draws},
                            {"variance_exact", hyperbolic_zeros_variance(model_h)}});
        } else if (model_name == "wperm") {
            ThetaSpec spec{{}, model_theta};
            auto wp = weighted_perm(spec, (int)model_n);
            double target = std::exp(std::lgamma(model_theta) -
                                     std::lgamma(model_theta * std::exp(model_z)));
            rows.push_back({{"n", model_n},
                            {"theta", model_theta},
                            {"h_n", wp.h[model_n]},
                            {"psi_n", wp.psi_n((int)model_n, model_z)},
                            {"gamma_ratio", target}});
        } else if (model_name == "omega") {
            auto stats = omega_statistics({(std::uint64_t)model_n});
            const auto& s = stats[0];
            rows.push_back({{"N", model_n},
                            {"mean", s.empirical_mean()},
                            {"mgf_empirical", s.empirical_mgf(model_z)},
                            {"mgf_display", omega_display_mgf(s.N, model_z)}});
        } else if (model_name == "pb") {
            auto pb = poisson_bernoulli(parse_doubles(model_plist));
            rows.push_back({{"t_n", pb.t_n},
                            {"degenerate", pb.degenerate},
                            {"mass_total", pb.law.total()},
                            {"mean", pb.law.mean()}});
        } else {
            throw validation_error("unknown model: " + model_name);
        }
        emit(config, rows, out_path);
        return 0;
    }
    if (*er) {
        // budget guard against runaway Monte Carlo configs: each sampled graph
        // costs ~n^2 elementary draws
        if (er_trials > 0 && (double)er_trials * er_n * er_n > 1e10)
            throw budget_exceeded_error("er trials * n^2 exceeds the sampling budget");
        json rows = json::array();
        PatternGraph pat = pattern_by_name(er_pattern, er_custom);
        if (er_op == "count") {
            if (!er->count("--seed")) throw validation_error("er count needs --seed");
            auto g = sample_gnp(er_n, er_p, er_seed);
            rows.push_back({{"n", er_n}, {"copies", count_copies(g, pat)}});
        } else if (er_op == "cumulants") {
            if (er_n <= 6) {
                Rational pq((int128)std::llround(er_p * 1000000), 1000000);
                auto c = exact_cumulants_bruteforce(er_n, pat, pq);
                rows.push_back({{"method", "bruteforce"},
                                {"kappa1", c.kappa1.to_double()},
                                {"kappa2", c.kappa2.to_double()},
                                {"kappa3", c.kappa3.to_double()}});
            }
            if (er_trials > 0) {
                if (!er->count("--seed")) throw validation_error("er cumulants needs --seed");
                auto mc = mc_cumulants(er_n, pat, er_p, er_trials, er_seed);
                rows.push_back({{"method", "monte-carlo"},
                                {"kappa1", mc.kappa1},
                                {"kappa2", mc.kappa2},
                                {"kappa3", mc.kappa3},
                                {"se2", mc.se2},
                                {"se3", mc.se3}});
            }
        } else if (er_op == "sigma") {
            auto [s2, L] = sigma2_L(pat, er_p);
            rows.push_back({{"sigma2", s2}, {"L", L}});
        } else if (er_op == "deviate") {
            auto e = triangle_deviation(er_n, er_p, er_v);
            rows.push_back(estimate_json(e));
            if (er_trials > 0) {
                if (!er->count("--seed")) throw validation_error("er deviate needs --seed");
                double threshold = std::pow((double)er_n, 3) * std::pow(er_p, 3) +
                                   (double)er_n * er_n * (er_v - 3 * std::pow(er_p, 3));
                auto mc = mc_triangle_tail(er_n, er_p, threshold, er_trials, er_seed);
                rows.push_back({{"empirical", mc.tail}, {"stderr", mc.stderr_}});
            }
        } else if (er_op == "poly") {
            Rational pq((int128)std::llround(er_p * 1000000), 1000000);
            auto fit = polynomiality_check(pat, pq, 2, {1, 2, 3, 4, 5}, 6);
            json coeffs = json::array();
            for (auto& cc : fit.coeffs) coeffs.push_back(cc.str());
            rows.push_back({{"coeffs", coeffs}, {"residual", fit.residual_at_holdout.str()}});
        } else {
            throw validation_error("unknown er op: " + er_op);
        }
        emit({{"cmd", "er"}, {"op", er_op}, {"pattern", er_pattern}, {"seed", er_seed}}, rows,
             out_path);
        return 0;
    }
    if (*thoma) {
        ThomaParameter w;
        w.alpha = parse_doubles(thoma_alpha);
        if (!thoma_beta.empty()) w.beta = parse_doubles(thoma_beta);
        json rows = json::array();
        if (thoma_op == "measure") {
            for (auto& [lam, mass] : central_measure(w, thoma_n)) {
                json part = json::array();
                for (int v : lam) part.push_back(v);
                rows.push_back({{"partition", part}, {"mass", mass}});
            }
        } else if (thoma_op == "cumulants") {
            auto kap = char_cumulants_exact(w, Partition{thoma_k}, thoma_n, 3);
            rows.push_back({{"kappa1", kap[0]},
                            {"kappa2", kap[1]},
                            {"kappa3", kap[2]},
                            {"tau", tau_omega(w, Partition{thoma_k})}});
        } else if (thoma_op == "limits") {
            auto lim = sigma2_L_char(w, thoma_k);
            rows.push_back({{"sigma2", lim.sigma2}, {"L", lim.L}, {"degenerate", lim.degenerate}});
        } else {
            throw validation_error("unknown thoma op: " + thoma_op);
        }
        emit({{"cmd", "thoma"}, {"op", thoma_op}, {"k", thoma_k}, {"n", thoma_n}}, rows, out_path);
        return 0;
    }
    if (*suite) {
        acceptance::SuiteOptions opt;
        opt.fast = suite_fast;
        std::vector<int> ids;
        if (suite_name == "all")
            for (int i = 1; i <= 15; ++i) ids.push_back(i);
        else if (suite_name == "legendre")
            ids = {1};
        else if (suite_name == "combinatorics")
            ids = {2, 3, 4};
        else if (suite_name == "deviations")
            ids = {5, 6, 7, 8};
        else if (suite_name == "graphs")
            ids = {9};
        else if (suite_name == "walk")
            ids = {11};
        else if (suite_name == "models")
            ids = {10, 12, 13, 15};
        else if (suite_name == "characters")
            ids = {14};
        else
            ids.push_back(std::stoi(suite_name));
        int failed = 0;
        json report = json::array();
        for (int id : ids) {
            auto r = acceptance::run_criterion(id, opt);
            std::printf("[%s] %2d %-42s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.id,
                        r.name.c_str(), r.seconds);
            for (const auto& line : r.details) std::printf("%s\n", line.c_str());
            report.push_back({{"id", r.id},
                              {"name", r.name},
                              {"passed", r.passed},
                              {"seconds", r.seconds},
                              {"details", r.details}});
            if (!r.passed) ++failed;
        }
        if (!suite_json.empty()) {
            std::ofstream out(suite_json);
            out << json{{"schema", 1},
                        {"config", {{"suite", suite_name}, {"fast", suite_fast}}},
                        {"criteria", report}}
                       .dump(2)
                << "\n";
        }
        return failed == 0 ? 0 : 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const validation_error& e) {
        nlohmann::json err = {{"error", "validation"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const numeric_error& e) {
        nlohmann::json err = {{"error", "numeric"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        nlohmann::json err = {{"error", "internal"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
