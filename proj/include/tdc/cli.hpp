#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "tdc/examples.hpp"
#include "tdc/poincare.hpp"

namespace tdc {

// Exit codes: 0 pass/success, 1 validation/verification failure,
// 2 obstruction, 3 malformed input.
enum ExitCode { EXIT_OK = 0, EXIT_FAIL = 1, EXIT_OBSTRUCTION = 2, EXIT_MALFORMED = 3 };

struct CliStreams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

inline std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline json parse_json(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON in " + what);
    return j;
}

inline AnyCocycle load_cocycle(const std::string& path, std::istream& in) {
    return cocycle_from_json(parse_json(read_input(path, in), path));
}

inline void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open output file: " + path);
    f << text;
}

inline Report validate_any(const AnyCocycle& c) {
    return std::visit([](const auto& x) { return validate(x); }, c);
}

inline std::uint64_t default_seed() {
    if (const char* env = std::getenv("TDC_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

namespace cli_detail {

inline int cmd_validate(const std::vector<std::string>& files, int jobs, CliStreams& io) {
    auto one = [&](const std::string& f) -> std::pair<std::string, int> {
        try {
            AnyCocycle c = load_cocycle(f, io.in);
            Report r = validate_any(c);
            return {r.to_string(), r.ok ? EXIT_OK : EXIT_FAIL};
        } catch (const std::invalid_argument& e) {
            return {std::string("ERROR ") + e.what(), EXIT_MALFORMED};
        }
    };
    int worst = EXIT_OK;
    if (jobs > 1 && files.size() > 1) {
        std::vector<std::future<std::pair<std::string, int>>> futs;
        for (const auto& f : files)
            futs.push_back(std::async(std::launch::async, one, f));
        for (std::size_t i = 0; i < files.size(); ++i) {
            auto [msg, code] = futs[i].get();
            if (files.size() > 1) io.out << files[i] << ": ";
            io.out << msg << "\n";
            worst = std::max(worst, code);
        }
    } else {
        for (const auto& f : files) {
            auto [msg, code] = one(f);
            if (files.size() > 1) io.out << f << ": ";
            io.out << msg << "\n";
            worst = std::max(worst, code);
        }
    }
    return worst;
}

inline SkewIntMat parse_matrix_arg(const std::string& text) {
    json j = parse_json(text, "--B matrix");
    SkewIntMat B;
    value_from_json(j, B);
    return B;
}

inline int cmd_push(AnyCocycle c, const std::string& map, const std::string& barg,
                    CliStreams& io) {
    AnyCocycle out;
    if (map == "leftleg" || map == "leleR") {
        if (auto* td = std::get_if<CocycleTD>(&c))
            out = leftleg(*td);
        else if (auto* th = std::get_if<CocycleTDhalf>(&c))
            out = leftleg(*th);
        else
            throw std::invalid_argument("leftleg needs a TD or TDhalf cocycle");
    } else if (map == "rightleg" || map == "releR") {
        if (auto* td = std::get_if<CocycleTD>(&c))
            out = rightleg(*td);
        else
            throw std::invalid_argument("rightleg needs a TD cocycle");
    } else if (map == "lele" || map == "rele") {
        auto* td = std::get_if<CocycleTD>(&c);
        if (!td) throw std::invalid_argument(map + " needs a TD cocycle");
        RawCocycle raw = encode_raw(*td);
        CI F = map == "lele" ? ci_lele(td->n) : ci_rele(td->n);
        RawCocycle pr = pushforward_raw(F, raw);
        CocycleTB2 y{td->n, td->nerve, zero_cochain(td->nerve, 1, rat_vec_zero(td->n)),
                     zero_cochain(td->nerve, 2, AffChar::zero(td->n))};
        for (std::size_t i = 0; i < pr.g.size(); ++i) y.g.vals[i] = mod1(pr.g[i]);
        for (std::size_t i = 0; i < pr.a.size(); ++i) y.tau.vals[i] = pr.a[i].tau;
        out = y;
    } else if (map == "flip") {
        auto* td = std::get_if<CocycleTD>(&c);
        if (!td) throw std::invalid_argument("flip needs a TD cocycle");
        out = flip_push(*td);
    } else if (map == "F_B") {
        auto* tb = std::get_if<CocycleTB2R>(&c);
        if (!tb) throw std::invalid_argument("F_B needs a TB2R cocycle");
        out = act_B(*tb, parse_matrix_arg(barg));
    } else if (map == "F_eB") {
        auto* td = std::get_if<CocycleTD>(&c);
        if (!td) throw std::invalid_argument("F_eB needs a TD cocycle");
        out = act_eB(*td, parse_matrix_arg(barg));
    } else if (map == "i") {
        if (auto* td = std::get_if<CocycleTD>(&c))
            out = i_push(*td);
        else if (auto* tb = std::get_if<CocycleTB2R>(&c))
            out = i_push(*tb);
        else
            throw std::invalid_argument("i needs a TD or TB2R cocycle");
    } else if (map == "p") {
        if (auto* th = std::get_if<CocycleTDhalf>(&c))
            out = p_push(*th);
        else if (auto* tb = std::get_if<CocycleTB1>(&c))
            out = p_push(*tb);
        else
            throw std::invalid_argument("p needs a TDhalf or TB1 cocycle");
    } else {
        throw std::invalid_argument("unknown map: " + map);
    }
    io.out << canonical_dump(cocycle_to_json(out));
    return EXIT_OK;
}

inline int cmd_dualize(const std::string& file, const std::string& outpath, bool trace,
                       CliStreams& io) {
    AnyCocycle c = load_cocycle(file, io.in);
    if (auto* tb2r = std::get_if<CocycleTB2R>(&c)) {
        DualizeResultTD d = dualize(*tb2r);
        if (!d.ok) {
            io.out << "OBSTRUCTION at " << d.obstruction_locus << "\n";
            return EXIT_OBSTRUCTION;
        }
        io.out << canonical_dump(cocycle_to_json(AnyCocycle(d.dual)));
        if (!outpath.empty()) {
            json bundle{{"type", "dualize-result"},
                        {"dual", cocycle_to_json(AnyCocycle(d.dual))},
                        {"witness", gauge_to_json(d.dual.nerve, d.dual.n, d.witness)}};
            write_output(canonical_dump(bundle), outpath, io.out);
        }
        return EXIT_OK;
    }
    auto* tb1 = std::get_if<CocycleTB1>(&c);
    if (!tb1) throw std::invalid_argument("dualize needs a TB1 (or TB2R) cocycle");
    DualizeResult d = dualize(*tb1);
    if (!d.ok) {
        const Nerve& nv = tb1->nerve;
        json ob;
        if (d.obstruction_locus == "a_hat")
            ob = obstruction_to_json(nv, d.obstruction_vec, d.obstruction_locus);
        else if (d.obstruction_locus == "omega")
            ob = obstruction_to_json(nv, d.obstruction_rat, d.obstruction_locus);
        else
            ob = obstruction_to_json(nv, d.obstruction_circle, d.obstruction_locus);
        io.out << canonical_dump(ob);
        return EXIT_OBSTRUCTION;
    }
    json bundle{{"type", "dualize-result"},
                {"dual", cocycle_to_json(AnyCocycle(d.dual))},
                {"witness", gauge_to_json(d.dual.nerve, d.dual.n, d.witness)}};
    if (trace) {
        const Nerve& nv = d.dual.nerve;
        bundle["trace"] = json{{"m_hat", cochain_to_json(nv, d.trace.m_hat)},
                               {"m_tilde", cochain_to_json(nv, d.trace.m_tilde)},
                               {"a_hat", cochain_to_json(nv, d.trace.a_hat)},
                               {"delta", cochain_to_json(nv, d.trace.delta3)},
                               {"omega", cochain_to_json(nv, d.trace.omega)},
                               {"beta", cochain_to_json(nv, d.trace.beta)}};
    }
    if (trace && outpath.empty()) {
        io.out << canonical_dump(bundle);
        return EXIT_OK;
    }
    io.out << canonical_dump(cocycle_to_json(AnyCocycle(d.dual)));
    if (!outpath.empty()) write_output(canonical_dump(bundle), outpath, io.out);
    return EXIT_OK;
}

inline int cmd_equiv_verify(const std::string& xf, const std::string& yf, const std::string& gf,
                            CliStreams& io) {
    AnyCocycle xc = load_cocycle(xf, io.in);
    AnyCocycle yc = load_cocycle(yf, io.in);
    json gj = parse_json(read_input(gf, io.in), gf);
    Report r;
    if (auto* x = std::get_if<CocycleTB1>(&xc)) {
        auto* y = std::get_if<CocycleTB1>(&yc);
        if (!y) throw std::invalid_argument("cocycle types differ");
        r = verify_gauge(*x, *y, gauge_tb1_from_json(gj, x->nerve, x->n));
    } else if (auto* x2 = std::get_if<CocycleTB2R>(&xc)) {
        auto* y = std::get_if<CocycleTB2R>(&yc);
        if (!y) throw std::invalid_argument("cocycle types differ");
        r = verify_gauge(*x2, *y, gauge_tb1_from_json(gj, x2->nerve, x2->n));
    } else if (auto* x3 = std::get_if<CocycleTD>(&xc)) {
        auto* y = std::get_if<CocycleTD>(&yc);
        if (!y) throw std::invalid_argument("cocycle types differ");
        r = verify_gauge(*x3, *y, gauge_tdhalf_from_json(gj, x3->nerve, x3->n));
    } else if (auto* x4 = std::get_if<CocycleTDhalf>(&xc)) {
        auto* y = std::get_if<CocycleTDhalf>(&yc);
        if (!y) throw std::invalid_argument("cocycle types differ");
        r = verify_gauge(*x4, *y, gauge_tdhalf_from_json(gj, x4->nerve, x4->n));
    } else {
        throw std::invalid_argument("equiv-verify supports TB2R, TB1, TD, TDhalf");
    }
    io.out << r.to_string() << "\n";
    return r.ok ? EXIT_OK : EXIT_FAIL;
}

inline int cmd_equiv_solve(const std::string& xf, const std::string& yf, const std::string& pf,
                           CliStreams& io) {
    AnyCocycle xc = load_cocycle(xf, io.in);
    AnyCocycle yc = load_cocycle(yf, io.in);
    json pj = parse_json(read_input(pf, io.in), pf);
    if (auto* x = std::get_if<CocycleTDhalf>(&xc)) {
        auto* y = std::get_if<CocycleTDhalf>(&yc);
        if (!y) throw std::invalid_argument("cocycle types differ");
        GaugeTDhalf part = gauge_tdhalf_from_json(pj, x->nerve, x->n);
        GaugeSolveTDhalf res = solve_gauge_restricted(*x, *y, part.C, part.z, part.z_hat);
        if (!res.ok) {
            if (!res.error.ok) {
                io.out << res.error.to_string() << "\n";
                return EXIT_FAIL;
            }
            json ob = res.obstruction_locus == "e"
                          ? obstruction_to_json(x->nerve, res.obstruction_circle,
                                                res.obstruction_locus)
                          : obstruction_to_json(x->nerve, res.obstruction_q,
                                                res.obstruction_locus);
            io.out << canonical_dump(ob);
            return EXIT_OBSTRUCTION;
        }
        io.out << canonical_dump(gauge_to_json(x->nerve, x->n, res.gauge));
        return EXIT_OK;
    }
    if (auto* x = std::get_if<CocycleTB1>(&xc)) {
        auto* y = std::get_if<CocycleTB1>(&yc);
        if (!y) throw std::invalid_argument("cocycle types differ");
        GaugeTDhalf part = gauge_tdhalf_from_json(pj, x->nerve, x->n);
        json pdata = pj.value("data", json::object());
        if (!pdata.contains("z_hat") && pdata.contains("eps")) {
            GaugeTB1 full = gauge_tb1_from_json(pj, x->nerve, x->n);
            for (const Simplex& s : x->nerve.simplices(1))
                part.z_hat.at(x->nerve, s) = full.eps.at(x->nerve, s).winding;
        }
        GaugeSolveTB1 res = solve_gauge_restricted(*x, *y, part.C, part.z, part.z_hat);
        if (!res.ok) {
            if (!res.error.ok) {
                io.out << res.error.to_string() << "\n";
                return EXIT_FAIL;
            }
            json ob = res.obstruction_locus == "eps"
                          ? obstruction_to_json(x->nerve, res.obstruction_circle,
                                                res.obstruction_locus)
                          : obstruction_to_json(x->nerve, res.obstruction_q,
                                                res.obstruction_locus);
            io.out << canonical_dump(ob);
            return EXIT_OBSTRUCTION;
        }
        io.out << canonical_dump(gauge_to_json(x->nerve, x->n, res.gauge));
        return EXIT_OK;
    }
    throw std::invalid_argument("equiv-solve supports TB1 and TDhalf");
}

inline int cmd_lift_gauge(const std::string& xf, const std::string& yf, const std::string& gf,
                          CliStreams& io) {
    AnyCocycle xc = load_cocycle(xf, io.in);
    AnyCocycle yc = load_cocycle(yf, io.in);
    auto* x = std::get_if<CocycleTDhalf>(&xc);
    auto* y = std::get_if<CocycleTDhalf>(&yc);
    if (!x || !y) throw std::invalid_argument("lift-gauge needs TDhalf cocycles");
    json gj = parse_json(read_input(gf, io.in), gf);
    GaugeTB1 g = gauge_tb1_from_json(gj, x->nerve, x->n);
    LiftGaugeResult res = lift_gauge(*x, *y, g);
    if (!res.ok) {
        json ob = res.obstruction_locus == "e"
                      ? obstruction_to_json(x->nerve, res.obstruction_circle,
                                            res.obstruction_locus)
                      : obstruction_to_json(x->nerve, res.obstruction_vec, res.obstruction_locus);
        io.out << canonical_dump(ob);
        return EXIT_OBSTRUCTION;
    }
    io.out << canonical_dump(gauge_to_json(x->nerve, x->n, res.gauge));
    return EXIT_OK;
}

inline int cmd_polarize(const std::string& file, const std::string& section, CliStreams& io) {
    AnyCocycle c = load_cocycle(file, io.in);
    auto* x = std::get_if<CocycleTDhalf>(&c);
    if (!x) throw std::invalid_argument("polarize needs a TDhalf cocycle");
    PolarizeResult res;
    if (!section.empty()) {
        json sj = parse_json(read_input(section, io.in), section);
        const json* cj = nullptr;
        if (sj.contains("data") && sj["data"].contains("C"))
            cj = &sj["data"]["C"];
        else if (sj.contains("C"))
            cj = &sj["C"];
        else
            cj = &sj;
        Cochain<SkewIntMat> C = cochain_from_json(x->nerve, 0, *cj, SkewIntMat::zero(x->n));
        res = polarize(*x, C);
        if (!res.ok) {
            io.out << res.error.to_string() << "\n";
            return EXIT_FAIL;
        }
    } else {
        res = polarize_search(*x);
        if (!res.ok) {
            json ob = obstruction_to_json(x->nerve, res.search, "polarization");
            io.out << canonical_dump(ob);
            return EXIT_OBSTRUCTION;
        }
    }
    io.out << canonical_dump(cocycle_to_json(AnyCocycle(res.cocycle)));
    return EXIT_OK;
}

inline int cmd_cup(const std::string& af, const std::string& bf, CliStreams& io) {
    json aj = parse_json(read_input(af, io.in), af);
    json bj = parse_json(read_input(bf, io.in), bf);
    Nerve nv = nerve_from_json(aj.at("nerve"));
    int da = aj.at("degree").get<int>();
    int db = bj.at("degree").get<int>();
    Cochain<Rat> a = cochain_from_json(nv, da, aj.at("data"), Rat(0));
    Cochain<Rat> b = cochain_from_json(nv, db, bj.at("data"), Rat(0));
    Cochain<Rat> r = cup(nv, a, b);
    json out{{"type", "cochain"},
             {"coef", aj.value("coef", "Q")},
             {"degree", r.degree},
             {"nerve", nerve_to_json(nv)},
             {"data", cochain_to_json(nv, r)}};
    io.out << canonical_dump(out);
    return EXIT_OK;
}

inline int cmd_rank(const std::string& nf, int deg, const std::string& ring, CliStreams& io) {
    json nj = parse_json(read_input(nf, io.in), nf);
    Nerve nv = nj.contains("nerve") ? nerve_from_json(nj.at("nerve")) : nerve_from_json(nj);
    Ring r = ring == "Z" ? Ring::Z : Ring::Q;
    io.out << cohomology_rank(nv, deg, r) << "\n";
    return EXIT_OK;
}

inline int cmd_info(const std::string& type, int n, CliStreams& io) {
    auto [pi0, pi1] = pi_invariants(type, n);
    io.out << "pi0 = " << pi0 << "\n" << "pi1 = " << pi1 << "\n";
    return EXIT_OK;
}

inline int cmd_gen_example(const std::string& name, int n, std::uint64_t seed,
                           const std::string& type, CliStreams& io) {
    AnyCocycle c = gen_example(name, n, seed, type);
    io.out << canonical_dump(cocycle_to_json(c));
    return EXIT_OK;
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
    CliStreams io{in, out, err};
    CLI::App app{"exact cocycle engine for torus T-duality 2-groups"};
    app.require_subcommand(1);

    // validate
    auto* sc_validate = app.add_subcommand("validate", "check cocycle conditions");
    std::vector<std::string> v_files;
    int v_jobs = 1;
    sc_validate->add_option("files", v_files, "cocycle files")->required();
    sc_validate->add_option("--jobs", v_jobs, "parallel validation jobs");

    // dualize
    auto* sc_dualize = app.add_subcommand("dualize", "construct the half-geometric dual");
    std::string d_file, d_out;
    bool d_trace = false;
    sc_dualize->add_option("file", d_file, "TB1 cocycle")->required();
    sc_dualize->add_option("-o,--output", d_out, "write result bundle here");
    sc_dualize->add_flag("--trace", d_trace, "include solver trace in the bundle");

    // leg/flip/act shortcuts
    auto* sc_leftleg = app.add_subcommand("leftleg", "left leg projection");
    std::string ll_file;
    sc_leftleg->add_option("file", ll_file)->required();
    auto* sc_rightleg = app.add_subcommand("rightleg", "right leg projection");
    std::string rl_file;
    sc_rightleg->add_option("file", rl_file)->required();
    auto* sc_flip = app.add_subcommand("flip", "swap the two torus directions");
    std::string fl_file;
    sc_flip->add_option("file", fl_file)->required();
    auto* sc_act = app.add_subcommand("act", "apply the so(n,Z)-action");
    std::string act_file, act_B;
    sc_act->add_option("file", act_file)->required();
    sc_act->add_option("--B", act_B, "skew matrix, e.g. [[0,1],[-1,0]]")->required();

    // push
    auto* sc_push = app.add_subcommand("push", "pushforward along a named map");
    std::string p_file, p_map, p_B;
    sc_push->add_option("file", p_file)->required();
    sc_push->add_option("--map", p_map, "flip|leleR|releR|lele|rele|F_B|F_eB|i|p")->required();
    sc_push->add_option("--B", p_B, "matrix for F_B / F_eB");

    // equiv-verify / equiv-solve / lift-gauge
    auto* sc_ev = app.add_subcommand("equiv-verify", "verify an equivalence datum");
    std::string ev_x, ev_y, ev_g;
    sc_ev->add_option("x", ev_x)->required();
    sc_ev->add_option("y", ev_y)->required();
    sc_ev->add_option("gauge", ev_g)->required();
    auto* sc_es = app.add_subcommand("equiv-solve", "solve for a gauge with fixed integer parts");
    std::string es_x, es_y, es_part;
    sc_es->add_option("x", es_x)->required();
    sc_es->add_option("y", es_y)->required();
    sc_es->add_option("--fix-int", es_part, "gauge file providing C, z, z_hat")->required();
    auto* sc_lg = app.add_subcommand("lift-gauge", "lift a left-leg gauge upstairs");
    std::string lg_x, lg_y, lg_g;
    sc_lg->add_option("x", lg_x)->required();
    sc_lg->add_option("y", lg_y)->required();
    sc_lg->add_option("gauge", lg_g)->required();

    // polarize
    auto* sc_pol = app.add_subcommand("polarize", "split off a geometric correspondence");
    std::string pol_file, pol_section;
    sc_pol->add_option("file", pol_file)->required();
    sc_pol->add_option("--section", pol_section, "JSON with the so(n,Z)-section C");

    // cup / rank / info / gen-example
    auto* sc_cup = app.add_subcommand("cup", "cup product of two cochains");
    std::string cup_a, cup_b;
    sc_cup->add_option("a", cup_a)->required();
    sc_cup->add_option("b", cup_b)->required();
    auto* sc_rank = app.add_subcommand("rank", "cohomology rank of a nerve");
    std::string rk_nerve, rk_ring = "Q";
    int rk_deg = 0;
    sc_rank->add_option("nerve", rk_nerve)->required();
    sc_rank->add_option("--deg", rk_deg)->required();
    sc_rank->add_option("--ring", rk_ring, "Q or Z");
    auto* sc_info = app.add_subcommand("info", "pi_0 / pi_1 of a named 2-group");
    std::string info_type;
    int info_n = 1;
    sc_info->add_option("type", info_type, "TB2R|TB1|TD|TDhalf")->required();
    sc_info->add_option("--n", info_n)->required();
    auto* sc_gen = app.add_subcommand("gen-example", "generate a named example cocycle");
    std::string gen_name, gen_type = "TB1";
    int gen_n = 1;
    std::uint64_t gen_seed = default_seed();
    sc_gen->add_option("name", gen_name, "zero|C_B|random-cone|sphere-obstruction")->required();
    sc_gen->add_option("--n", gen_n)->required();
    sc_gen->add_option("--seed", gen_seed);
    sc_gen->add_option("--type", gen_type, "cocycle type for zero/random-cone");

    std::vector<const char*> argv;
    argv.push_back("tdc");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        int code = app.exit(e, os, os);
        if (code == 0) {
            io.out << os.str();
            return EXIT_OK;  // --help
        }
        io.err << os.str();
        return EXIT_MALFORMED;
    }

    try {
        if (sc_validate->parsed()) return cli_detail::cmd_validate(v_files, v_jobs, io);
        if (sc_dualize->parsed()) return cli_detail::cmd_dualize(d_file, d_out, d_trace, io);
        if (sc_leftleg->parsed())
            return cli_detail::cmd_push(load_cocycle(ll_file, io.in), "leftleg", "", io);
        if (sc_rightleg->parsed())
            return cli_detail::cmd_push(load_cocycle(rl_file, io.in), "rightleg", "", io);
        if (sc_flip->parsed())
            return cli_detail::cmd_push(load_cocycle(fl_file, io.in), "flip", "", io);
        if (sc_act->parsed()) {
            AnyCocycle c = load_cocycle(act_file, io.in);
            if (std::holds_alternative<CocycleTD>(c))
                return cli_detail::cmd_push(std::move(c), "F_eB", act_B, io);
            if (std::holds_alternative<CocycleTB2R>(c))
                return cli_detail::cmd_push(std::move(c), "F_B", act_B, io);
            throw std::invalid_argument("act needs a TD or TB2R cocycle");
        }
        if (sc_push->parsed())
            return cli_detail::cmd_push(load_cocycle(p_file, io.in), p_map, p_B, io);
        if (sc_ev->parsed()) return cli_detail::cmd_equiv_verify(ev_x, ev_y, ev_g, io);
        if (sc_es->parsed()) return cli_detail::cmd_equiv_solve(es_x, es_y, es_part, io);
        if (sc_lg->parsed()) return cli_detail::cmd_lift_gauge(lg_x, lg_y, lg_g, io);
        if (sc_pol->parsed()) return cli_detail::cmd_polarize(pol_file, pol_section, io);
        if (sc_cup->parsed()) return cli_detail::cmd_cup(cup_a, cup_b, io);
        if (sc_rank->parsed()) return cli_detail::cmd_rank(rk_nerve, rk_deg, rk_ring, io);
        if (sc_info->parsed()) return cli_detail::cmd_info(info_type, info_n, io);
        if (sc_gen->parsed())
            return cli_detail::cmd_gen_example(gen_name, gen_n, gen_seed, gen_type, io);
    } catch (const std::invalid_argument& e) {
        io.err << "error: " << e.what() << "\n";
        return EXIT_MALFORMED;
    } catch (const nlohmann::json::exception& e) {
        io.err << "error: " << e.what() << "\n";
        return EXIT_MALFORMED;
    }
    io.err << "error: no subcommand\n";
    return EXIT_MALFORMED;
}

}  // namespace tdc
