// Acceptance gate for the flagship 7-torus quotient: runs the whole
// pipeline on the configuration given as argv[1] and prints one pass/fail
// line per criterion. Exits nonzero when any criterion fails.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <kummer/cohomology.hpp>
#include <kummer/config.hpp>
#include <kummer/fixed_loci.hpp>
#include <kummer/group.hpp>
#include <kummer/monomial.hpp>
#include <kummer/rational.hpp>
#include <kummer/report.hpp>
#include <kummer/resolution.hpp>
#include <kummer/ring.hpp>
#include <kummer/subtorus.hpp>

using namespace kummer;

namespace {

// Fails the enclosing criterion lambda with a reason on the first
// violated expectation.
#define EXPECT(cond, msg)          \
    do {                           \
        if (!(cond)) {             \
            why = (msg);           \
            return false;          \
        }                          \
    } while (0)

std::string betti_string(const std::vector<long long>& b) {
    std::string s = "(";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(b[i]);
    }
    return s + ")";
}

// All grid points x = p/M solving x = sign*x + b on the circle, by
// scanning the grid. M must be a multiple of twice b's denominator.
std::vector<Rational> circle_grid_solutions(int sign, const Rational& b, long long M) {
    std::vector<Rational> out;
    for (long long p = 0; p < M; ++p) {
        Rational x(p, M);
        Rational image = (sign == 1 ? x : -x) + b;
        if (image.mod1() == x) out.push_back(x);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <config-file>\n";
        return 2;
    }

    Config cfg;
    GroupZ2k group;
    try {
        std::ifstream in(argv[1]);
        if (!in.good()) throw Error(std::string("cannot open ") + argv[1]);
        std::stringstream buffer;
        buffer << in.rdbuf();
        cfg = parse_config(buffer.str());
        group = build_group(cfg);
    } catch (const std::exception& e) {
        std::cerr << "setup failed: " << e.what() << "\n";
        return 2;
    }

    const int n = group.dimension();
    const auto orbits = singular_orbits(group);
    const auto catalogue = generator_catalogue(group, orbits, invariant_basis(group, n - 4));
    const auto table = ring_table(group, catalogue);

    int failed = 0;
    auto criterion = [&](int idx, const std::string& label, auto&& body) {
        bool ok = false;
        std::string why;
        try {
            ok = body(why);
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        std::cout << "criterion " << idx << ": " << (ok ? "PASS" : "FAIL") << "  " << label;
        if (!ok && !why.empty()) std::cout << "  (" << why << ")";
        std::cout << "\n";
        if (!ok) ++failed;
    };

    criterion(1, "orbifold Betti numbers and invariant 3-form basis", [&](std::string& why) {
        auto betti = orbifold_betti(group);
        std::vector<long long> want = {1, 0, 0, 7, 7, 0, 0, 1};
        EXPECT(betti == want, "orbifold Betti " + betti_string(betti));
        std::vector<Monomial> basis = invariant_basis(group, 3);
        std::vector<Monomial> expected = {
            Monomial::of({2, 3, 5}), Monomial::of({1, 4, 5}), Monomial::of({1, 3, 6}),
            Monomial::of({2, 4, 6}), Monomial::of({1, 2, 7}), Monomial::of({3, 4, 7}),
            Monomial::of({5, 6, 7})};
        std::sort(expected.begin(), expected.end());
        EXPECT(basis == expected, "invariant 3-form basis differs");
        return true;
    });

    criterion(2, "fixed-locus census: three 16-component loci, free composites",
              [&](std::string& why) {
        EXPECT(n == 7 && group.rank() == 3, "expected a rank-3 group on the 7-torus");
        Rational half(1, 2);
        std::vector<Rational> quarters = {Rational(1, 4), Rational(3, 4)};
        for (int j = 0; j < 3; ++j) {
            const AffineInvolutionMap& m = group.generators()[std::size_t(j)];
            auto locus = fixed_locus(m);
            EXPECT(locus.size() == 16,
                   "generator " + std::to_string(j + 1) + " has " +
                       std::to_string(locus.size()) + " components");

            // Expected offsets from the per-coordinate solutions of
            // x = -x + b: the two points b/2 and b/2 + 1/2.
            std::uint64_t preserved = 0;
            std::vector<std::map<int, Rational>> expected = {{}};
            for (int i = 0; i < n; ++i) {
                if (m.sign(i) == 1) {
                    preserved |= 1ull << i;
                    EXPECT(m.translation(i).is_zero(), "preserved coordinate translated");
                    continue;
                }
                Rational lo = (m.translation(i) * Rational(1, 2)).mod1();
                std::vector<std::map<int, Rational>> next;
                for (const auto& base : expected)
                    for (const Rational& v : {lo, (lo + half).mod1()}) {
                        auto withv = base;
                        withv[i] = v;
                        next.push_back(std::move(withv));
                    }
                expected = std::move(next);
            }
            std::set<std::map<int, Rational>> want(expected.begin(), expected.end());
            std::set<std::map<int, Rational>> got;
            for (const auto& comp : locus) {
                EXPECT(comp.n == n && comp.free == Monomial(preserved) &&
                           comp.dimension() == 3,
                       "component shape is wrong");
                got.insert(comp.offsets);
            }
            EXPECT(got == want, "component offsets differ from the solved pattern");
        }

        // The quarter offsets appear exactly where the half-translations sit.
        for (const auto& comp : fixed_locus(group.generators()[0]))
            for (const auto& [i, v] : comp.offsets)
                EXPECT(v.is_zero() || v == half, "unexpected quarter offset");
        for (const auto& comp : fixed_locus(group.generators()[1]))
            EXPECT(comp.offsets.at(1) == quarters[0] || comp.offsets.at(1) == quarters[1],
                   "second coordinate is not at a quarter point");
        for (const auto& comp : fixed_locus(group.generators()[2]))
            for (int i : {0, 2})
                EXPECT(comp.offsets.at(i) == quarters[0] || comp.offsets.at(i) == quarters[1],
                       "reflected coordinate is not at a quarter point");

        for (std::size_t e : {3u, 5u, 6u, 7u})
            EXPECT(fixed_locus(group.element(e)).empty(),
                   "composite " + group.element_name(e) + " is not free");
        return true;
    });

    criterion(3, "twelve singular orbits of size four, split by the fourth offset",
              [&](std::string& why) {
        EXPECT(orbits.size() == 12, std::to_string(orbits.size()) + " orbits");
        std::map<std::size_t, int> per_stab;
        for (const auto& o : orbits) {
            EXPECT(o.members.size() == 4,
                   "orbit of size " + std::to_string(o.members.size()));
            ++per_stab[o.stabilizer];
        }
        EXPECT((per_stab == std::map<std::size_t, int>{{1, 4}, {2, 4}, {4, 4}}),
               "orbits are not split 4/4/4 across the three involutions");

        // The four orbits fixed by the first involution are told apart by
        // their third and fourth offsets; the fourth is orbit-constant.
        Rational half(1, 2);
        std::set<std::map<int, Rational>> reps;
        for (const auto& o : orbits) {
            if (o.stabilizer != 1) continue;
            reps.insert(o.representative().offsets);
            const Rational& theta4 = o.representative().offsets.at(3);
            for (const auto& m : o.members)
                EXPECT(m.offsets.at(3) == theta4, "fourth offset varies inside an orbit");
        }
        std::set<std::map<int, Rational>> want;
        for (const Rational& x : {Rational(0), half})
            for (const Rational& y : {Rational(0), half})
                want.insert({{0, Rational(0)}, {1, Rational(0)}, {2, x}, {3, y}});
        EXPECT(reps == want, "representatives differ from the frozen pattern");
        return true;
    });

    criterion(4, "resolvability checklist and fundamental-group coverage",
              [&](std::string& why) {
        ConditionReport joyce = check_joyce_conditions(group);
        for (const auto* entry : joyce.entries())
            EXPECT(entry->passed, "condition " + entry->id + " failed");
        EXPECT(joyce.all_passed(), "checklist failed");
        EXPECT(joyce.component_count == 48,
               std::to_string(joyce.component_count) + " components");
        EXPECT(joyce.orbit_count == 12, std::to_string(joyce.orbit_count) + " orbits");
        EXPECT(simply_connected_sufficient(group).sufficient,
               "coverage criterion does not apply");
        return true;
    });

    criterion(5, "resolved Betti numbers, duality symmetry, Euler characteristic",
              [&](std::string& why) {
        auto betti = resolved_betti(group, orbits);
        std::vector<long long> want = {1, 0, 12, 43, 43, 12, 0, 1};
        EXPECT(betti == want, "resolved Betti " + betti_string(betti));
        for (int k = 0; k <= n; ++k)
            EXPECT(betti[std::size_t(k)] == betti[std::size_t(n - k)],
                   "duality symmetry broken at degree " + std::to_string(k));
        long long euler = 0, sign = 1;
        for (long long b : betti) {
            euler += sign * b;
            sign = -sign;
        }
        EXPECT(euler == 0, "Euler characteristic " + std::to_string(euler));
        return true;
    });

    criterion(6, "intersection table census: 12 + 36 + 7 + 12 nonzero products",
              [&](std::string& why) {
        Rational minus2(-2), eight(8);
        int point_pairs = 0, graded_pairs = 0, torus_pairs = 0, self_squares = 0;
        for (const auto& entry : table.nontrivial_entries()) {
            const RingGenerator& a = catalogue.generators[entry.a];
            const RingGenerator& b = catalogue.generators[entry.b];
            const RingElement& v = entry.product.value;
            std::string tag = a.name + " . " + b.name;
            if (entry.a == entry.b) {
                EXPECT(a.kind == RingGenerator::Kind::CDual, "unexpected self product " + tag);
                std::size_t stab = catalogue.orbits[a.orbit].stabilizer;
                std::size_t tdelta = catalogue.tdelta_index.at(stab);
                EXPECT(v.scalar.is_zero() && v.terms.size() == 1 &&
                           v.terms.count(tdelta) == 1 && v.terms.at(tdelta) == minus2,
                       "self product " + tag + " is not -2 times the shared stratum class");
                ++self_squares;
            } else if (a.kind == RingGenerator::Kind::C &&
                       b.kind == RingGenerator::Kind::CDual) {
                EXPECT(a.orbit == b.orbit && v.terms.empty() && v.scalar == minus2,
                       "sphere pairing " + tag + " is not -2");
                ++point_pairs;
            } else if (a.kind == RingGenerator::Kind::CLambda &&
                       b.kind == RingGenerator::Kind::CTauDual) {
                EXPECT(a.orbit == b.orbit && a.j == b.j && v.terms.empty() &&
                           v.scalar == minus2,
                       "graded pairing " + tag + " is not -2");
                ++graded_pairs;
            } else if (a.is_t_side() && b.is_t_side()) {
                EXPECT(a.pair_monomial == b.pair_monomial && v.terms.empty() &&
                           v.scalar == eight,
                       "torus pairing " + tag + " is not 8");
                ++torus_pairs;
            } else {
                EXPECT(false, "unexpected nonzero product " + tag);
            }
        }
        EXPECT(point_pairs == 12, std::to_string(point_pairs) + " sphere pairings");
        EXPECT(graded_pairs == 36, std::to_string(graded_pairs) + " graded pairings");
        EXPECT(torus_pairs == 7, std::to_string(torus_pairs) + " torus pairings");
        EXPECT(self_squares == 12, std::to_string(self_squares) + " self squares");
        return true;
    });

    criterion(7, "pairing determinants 2^12 and 2^57", [&](std::string& why) {
        auto abs_det = [&](int k) {
            Rational d = pairing_matrix(table, k).determinant;
            return d < Rational(0) ? -d : d;
        };
        Rational d2 = abs_det(2), d3 = abs_det(3), d4 = abs_det(4), d5 = abs_det(5);
        EXPECT(d2 == Rational(1LL << 12), "degree-2 determinant " + d2.str());
        EXPECT(d5 == Rational(1LL << 12), "degree-5 determinant " + d5.str());
        EXPECT(d3 == Rational(1LL << 57), "degree-3 determinant " + d3.str());
        EXPECT(d4 == Rational(1LL << 57), "degree-4 determinant " + d4.str());
        return true;
    });

    criterion(8, "randomized oracles and algebraic laws", [&](std::string& why) {
        std::mt19937_64 rng(20240823);
        auto pick = [&](int lo, int hi) {
            return lo + static_cast<int>(rng() % std::uint64_t(hi - lo + 1));
        };

        // Fixed loci against per-coordinate grid scans.
        for (int trial = 0; trial < 200; ++trial) {
            int dim = pick(5, 8);
            std::vector<int> signs;
            std::vector<Rational> translation;
            for (int i = 0; i < dim; ++i) {
                signs.push_back(pick(0, 1) ? 1 : -1);
                if (signs.back() == 1) {
                    translation.emplace_back(pick(0, 1), 2);
                } else {
                    int q = pick(1, 8);
                    translation.emplace_back(pick(0, q - 1), q);
                }
            }
            AffineInvolutionMap m(signs, translation);

            bool possible = true;
            std::uint64_t preserved = 0;
            std::vector<std::map<int, Rational>> expected = {{}};
            for (int i = 0; i < dim; ++i) {
                long long M = 2 * m.translation(i).den();
                auto sols = circle_grid_solutions(m.sign(i), m.translation(i), M);
                if (m.sign(i) == 1) {
                    preserved |= 1ull << i;
                    if (sols.empty()) possible = false;
                    continue;
                }
                std::vector<std::map<int, Rational>> next;
                for (const auto& base : expected)
                    for (const Rational& v : sols) {
                        auto withv = base;
                        withv[i] = v;
                        next.push_back(std::move(withv));
                    }
                expected = std::move(next);
            }

            auto locus = fixed_locus(m);
            if (!possible) {
                EXPECT(locus.empty(), "trial " + std::to_string(trial) +
                                          ": locus should be empty");
                continue;
            }
            std::set<std::map<int, Rational>> want(expected.begin(), expected.end());
            std::set<std::map<int, Rational>> got;
            for (const auto& comp : locus) {
                EXPECT(comp.free == Monomial(preserved),
                       "trial " + std::to_string(trial) + ": wrong free coordinates");
                got.insert(comp.offsets);
            }
            EXPECT(got == want,
                   "trial " + std::to_string(trial) + ": offsets differ from grid scan");
        }

        // Intersection numbers of complementary subtori against grid counts.
        for (int trial = 0; trial < 200; ++trial) {
            int dim = pick(4, 8);
            std::uint64_t mask = rng() & ((1ull << dim) - 1);
            auto make = [&](Monomial free) {
                std::map<int, Rational> offsets;
                for (int i = 0; i < dim; ++i)
                    if (!free.contains(i)) {
                        int q = pick(1, 6);
                        offsets[i] = Rational(pick(0, q - 1), q);
                    }
                return AffineSubtorus(dim, free, std::move(offsets),
                                      pick(0, 1) ? 1 : -1);
            };
            AffineSubtorus a = make(Monomial(mask));
            AffineSubtorus b = make(Monomial(mask).complement(dim));

            long long grid = 1;
            for (const auto& sub : {a, b})
                for (const auto& [i, v] : sub.offsets) grid = std::lcm(grid, v.den());
            long long count = 1;
            for (int i = 0; i < dim; ++i) {
                const Rational& pin =
                    a.free.contains(i) ? b.offsets.at(i) : a.offsets.at(i);
                long long here = 0;
                for (long long p = 0; p < grid; ++p)
                    if (Rational(p, grid) == pin) ++here;
                count *= here;
            }
            int number = subtorus_intersection_number(a, b);
            EXPECT(std::abs(number) == count,
                   "trial " + std::to_string(trial) + ": intersection number " +
                       std::to_string(number) + " vs " + std::to_string(count) +
                       " grid points");
        }

        // Sign rule under swapping every stored product pair.
        std::size_t checked = 0;
        for (std::size_t ia = 0; ia < catalogue.generators.size(); ++ia)
            for (std::size_t ib = 0; ib < catalogue.generators.size(); ++ib) {
                if (!table.has(ia, ib)) continue;
                EXPECT(table.has(ib, ia), "missing mirrored product");
                int sign = anticommute_sign(n, catalogue.generators[ia].dim,
                                            catalogue.generators[ib].dim);
                EXPECT(table.at(ib, ia).value ==
                           table.at(ia, ib).value.scaled(Rational(sign)),
                       "sign rule fails on a mirrored pair");
                EXPECT(table.at(ib, ia).theorem_sourced ==
                           table.at(ia, ib).theorem_sourced,
                       "mirrored pair disagrees on sourcing");
                ++checked;
            }
        EXPECT(checked > 0, "no stored products checked");

        // Multiplicativity of the induced sign over the group.
        for (std::size_t e1 = 0; e1 < group.order(); ++e1)
            for (std::size_t e2 = 0; e2 < group.order(); ++e2) {
                AffineInvolutionMap h =
                    compose(group.element(e1), group.element(e2));
                for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
                    Monomial mono(bits);
                    EXPECT(induced_sign(h, mono) ==
                               induced_sign(group.element(e1), mono) *
                                   induced_sign(group.element(e2), mono),
                           "induced sign is not multiplicative");
                }
            }

        // Orbit sizes divide the group order and exhaust the components.
        std::size_t total = 0;
        for (std::size_t e = 1; e < group.order(); ++e)
            total += fixed_locus(group.element(e)).size();
        std::size_t in_orbits = 0;
        for (const auto& o : orbits) {
            EXPECT(group.order() % o.members.size() == 0,
                   "orbit size does not divide the group order");
            in_orbits += o.members.size();
        }
        EXPECT(in_orbits == total, "orbits do not exhaust the components");

        // Complementation pairs up the invariant bases.
        for (int k = 0; k <= n; ++k) {
            auto low = invariant_basis(group, k);
            auto high = invariant_basis(group, n - k);
            EXPECT(low.size() == high.size(),
                   "invariant dimensions differ at degree " + std::to_string(k));
            std::set<Monomial> high_set(high.begin(), high.end());
            for (const Monomial& m : low)
                EXPECT(high_set.count(m.complement(n)) == 1,
                       "complement of an invariant monomial is not invariant");
        }
        return true;
    });

    criterion(9, "Massey candidate enumeration matches brute force", [&](std::string& why) {
        auto gens = catalogue.indices_of_dim(n - 2);
        std::set<std::array<std::size_t, 3>> brute;
        for (std::size_t a : gens)
            for (std::size_t b : gens)
                for (std::size_t c : gens) {
                    bool qualifies = table.at(a, b).value.is_zero() &&
                                     table.at(b, c).value.is_zero();
                    std::size_t oa = catalogue.generators[a].orbit;
                    std::size_t ob = catalogue.generators[b].orbit;
                    std::size_t oc = catalogue.generators[c].orbit;
                    if (oa != ob && ob != oc && oa != oc)
                        EXPECT(qualifies, "distinct-orbit triple does not qualify");
                    if (a == b || b == c)
                        EXPECT(!qualifies, "triple with a repeated slot qualifies");
                    if (qualifies)
                        brute.insert({std::min(a, c), b, std::max(a, c)});
                }
        EXPECT(brute.size() == 792,
               std::to_string(brute.size()) + " brute-force candidates");

        auto candidates = massey_candidates(table);
        std::set<std::array<std::size_t, 3>> listed;
        for (const auto& c : candidates) listed.insert({c.a, c.b, c.c});
        EXPECT(listed == brute, "candidate list differs from brute force");

        auto reported = run("massey", cfg).json["massey_candidates"]["count"];
        EXPECT(reported.get<std::size_t>() == brute.size(),
               "reported count differs from brute force");
        return true;
    });

    if (failed == 0) {
        std::cout << "acceptance: 9/9 criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << (9 - failed) << "/9 criteria passed\n";
    return 1;
}
