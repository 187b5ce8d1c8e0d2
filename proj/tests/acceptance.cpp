// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout (zero tolerance), seeded so that reruns are reproducible.

#include <chrono>
#include <iostream>
#include <sstream>

#include "tdc/cli.hpp"

using namespace tdc;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int k, bool ok, const std::string& what) {
    std::cout << "CRITERION " << k << (ok ? " PASS" : " FAIL") << " - " << what << "\n";
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// --- 1. intertwiner axioms -------------------------------------------------

void criterion1() {
    auto t0 = Clock::now();
    Rng rng(1001);
    bool ok = true;
    SkewIntMat B = rng.skew(2);
    ok = ok && ci_check_axioms(ci_flip(2), 1000, rng).ok;
    ok = ok && ci_check_axioms(ci_leleR(2), 1000, rng).ok;
    ok = ok && ci_check_axioms(ci_releR(2), 1000, rng).ok;
    ok = ok && ci_check_axioms(ci_FB(B), 1000, rng).ok;
    ok = ok && ci_check_axioms(ci_FeB(B), 1000, rng).ok;
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << "intertwiner axioms, 1000 samples each, " << dt << "s";
    report(1, ok && dt < 5.0, os.str());
}

// --- 2. composition laws ---------------------------------------------------

void criterion2() {
    Rng rng(1002);
    bool ok = true;
    for (int i = 0; i < 100 && ok; ++i) {
        int n = 2;
        SkewIntMat B1 = rng.skew(n), B2 = rng.skew(n);
        CI cb = ci_compose(ci_FB(B2), ci_FB(B1));
        CI db = ci_FB(B1 + B2);
        CI ce = ci_compose(ci_FeB(B2), ci_FeB(B1));
        CI de = ci_FeB(B1 + B2);
        for (int k = 0; k < 3; ++k) {
            RatVec g1 = rng.rat_vec(n), g2 = rng.rat_vec(n);
            HV h = random_h(cm_tb2r(n), rng);
            ok = ok && cb.cod.g_eq(cb.phi(g1), db.phi(g1)) && cb.cod.h_eq(cb.f(h), db.f(h)) &&
                 cb.cod.h_eq(cb.eta(g1, g2), db.eta(g1, g2));
            RatVec e1 = rng.rat_vec(2 * n), e2 = rng.rat_vec(2 * n);
            HV he = random_h(cm_td(n), rng);
            ok = ok && ce.cod.g_eq(ce.phi(e1), de.phi(e1)) && ce.cod.h_eq(ce.f(he), de.f(he)) &&
                 ce.cod.h_eq(ce.eta(e1, e2), de.eta(e1, e2));
        }
    }
    CI flip2 = ci_compose(ci_flip(2), ci_flip(2));
    CMDesc td = cm_td(2);
    for (int i = 0; i < 100 && ok; ++i) {
        RatVec x1 = rng.rat_vec(4), x2 = rng.rat_vec(4);
        HV expect = td.h_zero();
        expect.t = Circle(dot(first_half(x1), second_half(x2)) +
                          dot(second_half(x1), first_half(x2)));
        ok = ok && td.h_eq(flip2.eta(x1, x2), expect);
    }
    report(2, ok, "F_B composition law and the flip-squared eta closed form");
}

// --- 3. equivariance -------------------------------------------------------

void criterion3() {
    Rng rng(1003);
    bool ok = ci_check_equivariance(
                  ci_leleR(2), [](const SkewIntMat& B) { return ci_FeB(B); },
                  [](const SkewIntMat& B) { return ci_FB(B); }, 100, rng)
                  .ok;
    // negative control: releR violates the eta-condition on a fixed sample
    SkewIntMat B = SkewIntMat::from_rows({{Int(0), Int(-1)}, {Int(1), Int(0)}});
    CI F = ci_releR(2);
    RatVec g1{Rat(0), make_rat(1, 2), Rat(0), Rat(0)};
    RatVec g2{make_rat(1, 3), Rat(0), Rat(0), Rat(0)};
    HV lhs = F.cod.h_add(ci_FB(B).eta(F.phi(g1), F.phi(g2)), ci_FB(B).f(F.eta(g1, g2)));
    HV rhs = F.cod.h_add(F.eta(ci_FeB(B).phi(g1), ci_FeB(B).phi(g2)),
                         F.f(ci_FeB(B).eta(g1, g2)));
    bool neg = !F.cod.h_eq(lhs, rhs);
    report(3, ok && neg, "leleR equivariant on 100 samples; releR negative control fails");
}

// --- 4. semi-direct coherence ----------------------------------------------

void criterion4() {
    Rng rng(1004);
    bool ok = true;
    for (SdDesc sd : {sd_tb1(2), sd_tdhalf(2)}) {
        for (int i = 0; i < 500 && ok; ++i) {
            SdMor g3{random_h(sd.base, rng), rng.rat_vec(sd.base.gdim()), rng.skew(2, 2)};
            SdMor g2{random_h(sd.base, rng), rng.rat_vec(sd.base.gdim()), rng.skew(2, 2)};
            SdMor g1{random_h(sd.base, rng), rng.rat_vec(sd.base.gdim()), rng.skew(2, 2)};
            SdObj s3 = sd_source(g3), s2 = sd_source(g2), s1 = sd_source(g1);
            SdObj t3 = sd_target(sd, g3), t2 = sd_target(sd, g2), t1 = sd_target(sd, g1);
            SdMor lhs = sd_compose(sd, sd_associator(t3, t2, t1, sd),
                                   sd_mult_mor(sd_mult_mor(g3, g2, sd), g1, sd));
            SdMor rhs = sd_compose(sd, sd_mult_mor(g3, sd_mult_mor(g2, g1, sd), sd),
                                   sd_associator(s3, s2, s1, sd));
            ok = ok && sd_mor_eq(sd, lhs, rhs);
        }
        for (int i = 0; i < 500 && ok; ++i) {
            SdObj g4{rng.rat_vec(sd.base.gdim()), rng.skew(2, 2)};
            SdObj g3{rng.rat_vec(sd.base.gdim()), rng.skew(2, 2)};
            SdObj g2{rng.rat_vec(sd.base.gdim()), rng.skew(2, 2)};
            SdObj g1{rng.rat_vec(sd.base.gdim()), rng.skew(2, 2)};
            HV lhs = sd.base.h_add(
                sd.base.h_add(sd_mult_mor(sd_associator(g4, g3, g2, sd), sd_id(g1, sd), sd).h,
                              sd_associator(g4, sd_mult_obj(g3, g2, sd), g1, sd).h),
                sd_mult_mor(sd_id(g4, sd), sd_associator(g3, g2, g1, sd), sd).h);
            HV rhs = sd.base.h_add(sd_associator(sd_mult_obj(g4, g3, sd), g2, g1, sd).h,
                                   sd_associator(g4, g3, sd_mult_obj(g2, g1, sd), sd).h);
            ok = ok && sd.base.h_eq(lhs, rhs);
        }
    }
    // explicit arrow product of the bracket semi-direct product
    SdDesc sd = sd_tb1(2);
    for (int i = 0; i < 500 && ok; ++i) {
        SdMor m2{random_h(sd.base, rng), rng.rat_vec(2), rng.skew(2, 2)};
        SdMor m1{random_h(sd.base, rng), rng.rat_vec(2), rng.skew(2, 2)};
        SdMor prod = sd_mult_mor(m2, m1, sd);
        AffChar expect = m2.h.tau -
                         AffChar::constant_char(
                             bracket_low(m1.g, m2.u, to_rat_vec(m1.h.z)), 2) +
                         aff_translate(m2.g, m1.h.tau) -
                         aff_translate(m2.g, aff_of_bra(m1.h.z, m2.u));
        ok = ok && prod.h.tau == expect && prod.h.z == m2.h.z + m1.h.z &&
             prod.g == m2.g + m1.g;
    }
    report(4, ok, "associator naturality, pentagon, and the explicit arrow product");
}

// --- 5. validator consistency ----------------------------------------------

void criterion5() {
    Nerve cone = nerve_cone();
    Rng rng(1005);
    bool ok = true;
    auto agree_valid = [&](auto make) {
        for (int i = 0; i < 100 && ok; ++i) {
            auto x = make();
            Report t = validate(x);
            Report g = generic_validate(encode_raw(x));
            ok = ok && t.ok && g.ok;
        }
    };
    auto agree_invalid = [&](auto make, auto perturb) {
        for (int i = 0; i < 100 && ok; ++i) {
            auto x = make();
            perturb(x, rng);
            Report t = validate(x);
            Report g = generic_validate(encode_raw(x));
            ok = ok && !t.ok && !g.ok && t.where == g.where;
        }
    };
    agree_valid([&] { return random_tb2r(2, cone, rng); });
    agree_valid([&] { return random_tb1(2, cone, rng); });
    agree_valid([&] { return random_td(2, cone, rng); });
    agree_valid([&] { return random_tdhalf(2, cone, rng); });
    agree_invalid([&] { return random_tb2r(2, cone, rng); },
                  [](CocycleTB2R& c, Rng& r) {
                      if (r.below(2))
                          c.tau.vals[r.below(c.tau.vals.size())].winding[0] += 1;
                      else
                          c.a.vals[r.below(c.a.vals.size())][0] += make_rat(1, 3);
                  });
    agree_invalid([&] { return random_tb1(2, cone, rng); },
                  [](CocycleTB1& c, Rng& r) {
                      if (r.below(2))
                          { auto k = r.below(c.tau.vals.size());
                            c.tau.vals[k].constant = c.tau.vals[k].constant + Circle(make_rat(1, 3)); }
                      else
                          c.a.vals[r.below(c.a.vals.size())][1] += make_rat(1, 5);
                  });
    agree_invalid([&] { return random_td(2, cone, rng); },
                  [](CocycleTD& c, Rng& r) {
                      if (r.below(2))
                          { auto k = r.below(c.t.vals.size());
                            c.t.vals[k] = c.t.vals[k] + Circle(make_rat(1, 4)); }
                      else
                          c.a_hat.vals[r.below(c.a_hat.vals.size())][0] += make_rat(1, 7);
                  });
    agree_invalid([&] { return random_tdhalf(2, cone, rng); },
                  [](CocycleTDhalf& c, Rng& r) {
                      switch (r.below(3)) {
                          case 0:
                              { auto k = r.below(c.t.vals.size());
                                c.t.vals[k] = c.t.vals[k] + Circle(make_rat(1, 3)); }
                              break;
                          case 1:
                              c.a_hat.vals[r.below(c.a_hat.vals.size())][0] += make_rat(1, 5);
                              break;
                          default:
                              c.a.vals[r.below(c.a.vals.size())][1] += make_rat(2, 7);
                              break;
                      }
                  });
    report(5, ok, "generic and typed validators agree on 100+100 cocycles per type");
}

// --- 6. dualization surjectivity ---------------------------------------------

void criterion6() {
    auto t0 = Clock::now();
    Nerve cone = nerve_cone();
    Rng rng(1006);
    bool ok = true;
    int count = 0;
    for (int n : {1, 2, 3}) {
        int reps = n == 3 ? 34 : 33;
        for (int i = 0; i < reps && ok; ++i) {
            CocycleTB1 x = random_tb1(n, cone, rng);
            DualizeResult d = dualize(x);
            ok = ok && d.ok && validate(d.dual).ok &&
                 verify_gauge(x, leftleg(d.dual), d.witness).ok;
            ++count;
        }
    }
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << count << " seeded backgrounds dualize with exact witnesses, " << dt << "s";
    report(6, ok && count == 100 && dt < 30.0, os.str());
}

// --- 7. gauge lifting (injectivity) ------------------------------------------

void criterion7() {
    Nerve cone = nerve_cone();
    Rng rng(1007);
    bool ok = true;
    for (int i = 0; i < 50 && ok; ++i) {
        CocycleTDhalf x = random_tdhalf(2, cone, rng);
        GaugeTDhalf h = random_gauge_tdhalf(2, cone, rng);
        CocycleTDhalf y = apply_gauge(x, h);
        GaugeTB1 g = induced_leftleg_gauge(x, y, h);
        ok = ok && verify_gauge(leftleg(x), leftleg(y), g).ok;
        if (!ok) break;
        LiftGaugeResult res = lift_gauge(x, y, g);
        ok = ok && res.ok && verify_gauge(x, y, res.gauge).ok;
    }
    report(7, ok, "50 gauge pairs lift from the induced left-leg gauge exactly");
}

// --- 8. worked example pipeline ---------------------------------------------

void criterion8() {
    bool ok = true;
    CocycleTDhalf cb = example_CB(2);
    ok = ok && validate(cb).ok;
    CocycleTB1 ll = leftleg(cb);
    ok = ok && ll.B == cb.B && ll.a == zero_cochain(cb.nerve, 1, rat_vec_zero(2)) &&
         ll.m == zero_cochain(cb.nerve, 2, int_vec_zero(2)) &&
         ll.tau == zero_cochain(cb.nerve, 2, AffChar::zero(2));
    CocycleSO so = p_push(cb);
    auto zclass = solve_coboundary(so.nerve, cochain_neg(so.B), Ring::Z, SkewIntMat::zero(2));
    ok = ok && !zclass.ok && zclass.rank == 1;
    PolarizeResult pol = polarize_search(cb);
    ok = ok && !pol.ok;
    DualizeResult d = dualize(ll);
    ok = ok && d.ok && d.dual == cb && verify_gauge(ll, leftleg(d.dual), d.witness).ok;
    report(8, ok, "C_B pipeline: validate, left leg, class, polarization, dual");
}

// --- 9. obstruction honesty -------------------------------------------------

void criterion9() {
    CocycleTB1 x = example_sphere_obstruction(1);
    DualizeResult d1 = dualize(x);
    DualizeResult d2 = dualize(x);
    bool ok = !d1.ok && d1.obstruction_locus == "a_hat" && d1.obstruction_vec.rank == 1 &&
              d1.obstruction_vec.rank == cohomology_rank(nerve_sphere(), 2, Ring::Q) &&
              d2.obstruction_vec.representative == d1.obstruction_vec.representative;
    // the representative itself stays non-exact
    auto again =
        solve_coboundary(nerve_sphere(), d1.obstruction_vec.representative, Ring::Q,
                         rat_vec_zero(1));
    ok = ok && !again.ok && again.rank == 1;
    report(9, ok, "sphere class obstructs deterministically with matching rank");
}

// --- 10. fibre sequence ------------------------------------------------------

void criterion10() {
    Nerve cone = nerve_cone();
    Rng rng(1010);
    bool ok = true;
    Cochain<SkewIntMat> zeroB = zero_cochain(cone, 1, SkewIntMat::zero(2));
    for (int i = 0; i < 100 && ok; ++i) {
        CocycleTD x = random_td(2, cone, rng);
        ok = ok && p_push(i_push(x)).B == zeroB;
    }
    for (int i = 0; i < 50 && ok; ++i) {
        CocycleTD x = random_td(2, cone, rng);
        SkewIntMat B = rng.skew(2);
        ok = ok &&
             verify_gauge(i_push(x), i_push(act_eB(x, B)), constant_so_gauge(2, cone, B)).ok;
    }
    report(10, ok, "p after i vanishes; orbit gauges verify with constant sections");
}

// --- 11. cup identities -------------------------------------------------------

void criterion11() {
    Nerve cone = nerve_cone();
    Rng rng(1011);
    bool ok = true;
    auto rnd = [&](int deg) {
        Cochain<Rat> c = Cochain<Rat>::zero_like(cone, deg, Rat(0));
        for (auto& v : c.vals) v = Rat(rng.zint());
        return c;
    };
    std::vector<std::pair<int, int>> degs{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 2}, {2, 0}};
    int count = 0;
    while (count < 200 && ok) {
        for (auto [k, l] : degs) {
            Cochain<Rat> a = rnd(k), b = rnd(l);
            Cochain<Rat> lhs = coboundary(cone, cup(cone, a, b), Rat(0));
            Cochain<Rat> rhs = cup(cone, coboundary(cone, a, Rat(0)), b);
            Cochain<Rat> second = cup(cone, a, coboundary(cone, b, Rat(0)));
            if (k % 2 == 1) second = cochain_neg(second);
            ok = ok && lhs == cochain_add(rhs, second);
            ++count;
        }
    }
    // the degree-3 class of a product: p = q u z on the 4-vertex nerve
    for (int i = 0; i < 20 && ok; ++i) {
        Cochain<Rat> gt = Cochain<Rat>::zero_like(cone, 1, Rat(0));
        for (auto& v : gt.vals) v = rng.rat();
        Cochain<Rat> z = coboundary(cone, rnd(0), Rat(0));
        ok = ok && coboundary(cone, cup(cone, gt, z), Rat(0)) ==
                       cup(cone, coboundary(cone, gt, Rat(0)), z);
    }
    report(11, ok, "Leibniz on 200+ integer pairs and the q-cup-z identity");
}

// --- 12. determinism ----------------------------------------------------------

void criterion12() {
    bool ok = true;
    auto run = [&](std::vector<std::string> args, const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out, err;
        int code = run_cli(args, in, out, err);
        return std::make_pair(code, out.str());
    };
    auto twice = [&](std::vector<std::string> args, const std::string& input = "") {
        auto a = run(args, input);
        auto b = run(args, input);
        ok = ok && a.first == b.first && a.second == b.second;
        return a.second;
    };

    std::string cb = twice({"gen-example", "C_B", "--n", "2"});
    std::string rc = twice({"gen-example", "random-cone", "--n", "2", "--seed", "9"});
    std::string sphere = twice({"gen-example", "sphere-obstruction", "--n", "1"});
    twice({"gen-example", "zero", "--n", "2"});
    twice({"validate", "-"}, cb);
    std::string ll = twice({"leftleg", "-"}, cb);
    twice({"dualize", "-"}, ll);
    twice({"dualize", "-"}, sphere);
    twice({"polarize", "-"}, cb);
    twice({"rank", "-", "--deg", "1", "--ring", "Q"},
          R"({"vertices":[0,1,2],"simplices":[[0,1],[1,2],[0,2]]})");
    twice({"info", "TDhalf", "--n", "2"});

    Rng rng(1012);
    Nerve cone = nerve_cone();
    CocycleTD td = random_td(2, cone, rng);
    std::string tds = canonical_dump(cocycle_to_json(AnyCocycle(td)));
    twice({"rightleg", "-"}, tds);
    twice({"flip", "-"}, tds);
    twice({"act", "-", "--B", "[[0,1],[-1,0]]"}, tds);
    twice({"push", "-", "--map", "i"}, tds);

    CocycleTDhalf x = random_tdhalf(2, cone, rng);
    GaugeTDhalf g = random_gauge_tdhalf(2, cone, rng);
    CocycleTDhalf y = apply_gauge(x, g);
    auto tmp = std::filesystem::temp_directory_path() / "tdc_acceptance";
    std::filesystem::create_directories(tmp);
    auto put = [&](const char* name, const std::string& text) {
        std::ofstream f(tmp / name);
        f << text;
        return (tmp / name).string();
    };
    std::string px = put("x.json", canonical_dump(cocycle_to_json(AnyCocycle(x))));
    std::string py = put("y.json", canonical_dump(cocycle_to_json(AnyCocycle(y))));
    std::string pg = put("g.json", canonical_dump(gauge_to_json(cone, 2, g)));
    twice({"equiv-verify", px, py, pg});
    twice({"equiv-solve", px, py, "--fix-int", pg});
    GaugeTB1 llg = induced_leftleg_gauge(x, y, g);
    std::string pllg = put("llg.json", canonical_dump(gauge_to_json(cone, 2, llg)));
    twice({"lift-gauge", px, py, pllg});
    std::string nerves = put("nerve.json",
                             R"({"vertices":[0,1,2],"simplices":[[0,1,2]]})");
    std::string ca = put("ca.json",
                         R"({"type":"cochain","coef":"Z","degree":1,"nerve":{"vertices":[0,1,2],)"
                         R"("simplices":[[0,1,2]]},"data":{"0,1":"1","1,2":"2","0,2":"3"}})");
    twice({"cup", ca, ca});
    (void)nerves;
    (void)rc;
    report(12, ok, "every subcommand is byte-identical across repeated runs");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    if (failures) {
        std::cout << failures << " criteria FAILED\n";
        return 1;
    }
    std::cout << "all 12 criteria passed\n";
    return 0;
}
