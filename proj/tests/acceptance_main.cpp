// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// criteria hold. Every comparison is exact; there are no tolerances anywhere.

#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lcmdual/cellres.hpp"
#include "lcmdual/ferrers.hpp"
#include "lcmdual/fiber.hpp"
#include "lcmdual/monomial.hpp"
#include "lcmdual/text_io.hpp"

using namespace lcmdual;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<void()>& body) {
    try {
        body();
        std::cout << "criterion " << number << ": PASS  " << label << "\n";
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "criterion " << number << ": FAIL  " << label << "  [" << e.what() << "]\n";
    }
}

void expect(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

MonomialIdeal ideal(std::size_t n, std::vector<std::vector<int>> gens) {
    std::vector<Monomial> ms;
    for (auto& g : gens) ms.push_back(Monomial(std::move(g)));
    return MonomialIdeal::from_generators(n, std::move(ms));
}

std::vector<Partition> all_partitions(int max_rows, int max_first) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int next_max) -> void {
        if (!parts.empty()) out.push_back(Partition(parts));
        if (static_cast<int>(parts.size()) == max_rows) return;
        for (int p = next_max; p >= 1; --p) {
            parts.push_back(p);
            self(self, p);
            parts.pop_back();
        }
    };
    rec(rec, max_first);
    return out;
}

std::vector<Partition> staircase_partitions(int max_rows, int max_first) {
    std::vector<Partition> out;
    for (const Partition& lambda : all_partitions(max_rows, max_first))
        if (lambda.admits_staircase()) out.push_back(lambda);
    return out;
}

struct Rng {
    std::mt19937 engine;

    explicit Rng(unsigned seed) : engine(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine); }

    MonomialIdeal ideal() {
        const std::size_t n = static_cast<std::size_t>(uniform(1, 5));
        std::vector<Monomial> gens;
        const int count = uniform(1, 8);
        for (int g = 0; g < count; ++g) {
            std::vector<int> e(n);
            do {
                for (auto& v : e) v = uniform(0, 5);
            } while (std::all_of(e.begin(), e.end(), [](int v) { return v == 0; }));
            gens.push_back(Monomial(e));
        }
        return MonomialIdeal::from_generators(n, std::move(gens));
    }

    MonomialIdeal equigenerated(std::size_t n, int degree, int count) {
        std::vector<Monomial> gens;
        for (int g = 0; g < count; ++g) {
            std::vector<int> e(n, 0);
            for (int d = 0; d < degree; ++d)
                ++e[static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1))];
            gens.push_back(Monomial(std::move(e)));
        }
        return MonomialIdeal::from_generators(n, std::move(gens));
    }
};

void criterion_1() {
    expect(lcm_dual(ideal(2, {{3, 0}, {2, 2}, {0, 4}})) == ideal(2, {{3, 0}, {1, 2}, {0, 4}}),
           "dual of (x^3, x^2y^2, y^4)");

    const auto height_one = ideal(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}});
    expect(lcm_dual(lcm_dual(height_one)) == ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
           "double dual of (x1^2, x1x2, x1x3)");

    const auto ss = strongly_stable_from_partition(Partition({4, 4, 3}));
    const auto listed = ideal(4, {{0, 2, 2, 1}, {1, 1, 2, 1}, {1, 2, 1, 1}, {1, 2, 2, 0},
                                  {2, 0, 2, 1}, {2, 1, 1, 1}, {2, 1, 2, 0}, {2, 2, 0, 1}});
    expect(lcm_dual(ss) == listed, "dual of the (4,4,3) strongly stable ideal");

    const auto i = ideal(2, {{3, 0}, {1, 1}, {0, 2}});
    const auto dual_sq = product(lcm_dual(i), lcm_dual(i));
    const auto sq_dual = lcm_dual(product(i, i));
    expect(dual_sq.contains(Monomial({3, 2})), "witness lies in the square of the dual");
    expect(!sq_dual.contains(Monomial({3, 2})), "witness misses the dual of the square");
    for (const Monomial& g : sq_dual.generators())
        expect(dual_sq.contains(g), "dual of the square inside the square of the dual");
    expect(dual_sq != sq_dual, "containment is strict");
}

void criterion_2() {
    Rng rng(101);
    int tall = 0, short_violations = 0, short_total = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const MonomialIdeal i = rng.ideal();
        if (!i.is_proper()) continue;
        if (height(i).height >= 2) {
            ++tall;
            expect(lcm_dual(lcm_dual(i)) == i, "double dual law");
        } else {
            ++short_total;
            if (lcm_dual(lcm_dual(i)) != i) ++short_violations;
        }
    }
    expect(tall >= 50, "enough height >= 2 samples");
    expect(short_total >= 1 && short_violations >= 1, "a height-1 sample violates the law");
    expect(short_violations == short_total, "every height-1 sample violates the law");
}

void criterion_3() {
    Rng rng(202);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
        const MonomialIdeal a = rng.equigenerated(n, rng.uniform(1, 4), rng.uniform(1, 6));
        const MonomialIdeal b = rng.equigenerated(n, rng.uniform(1, 4), rng.uniform(1, 6));
        expect(lcm_dual(product(a, b)) == product(lcm_dual(a), lcm_dual(b)), "product law");
    }
}

void criterion_4() {
    int count = 0;
    for (const Partition& lambda : all_partitions(4, 5)) {
        ++count;
        const std::size_t ambient = lambda.rows() + static_cast<std::size_t>(lambda.cols());
        const auto comps = ferrers_dual_primary_decomposition(lambda);
        for (const auto& a : comps)
            for (const auto& b : comps)
                if (!(a == b))
                    expect(!std::includes(a.variables.begin(), a.variables.end(),
                                          b.variables.begin(), b.variables.end()),
                           "components are irredundant");
        const auto dual = lcm_dual(ferrers_ideal(lambda));
        expect(intersect_components(comps, ambient) == dual,
               "closed form intersects to the dual");
        expect(alexander_dual(complement_edge_ideal(ferrers_graph(lambda))) == dual,
               "alexander dual of the complement equals the dual");
    }
    expect(count >= 30, "at least 30 partitions covered");
}

void criterion_5() {
    for (const Partition& lambda : staircase_partitions(4, 6)) {
        const LabeledComplex x = build_complex(lambda);
        const ResolutionSummary summary = verify_resolution(lambda);

        const auto formulas = betti_formulas(lambda);
        for (std::size_t k = 0; k < 3; ++k)
            expect(static_cast<long>(summary.betti[k]) == formulas.betti[k],
                   "closed-form betti numbers match the complex");
        expect(betti_identities(lambda), "rewritten betti identities hold");

        const auto dual = lcm_dual(strongly_stable_from_partition(lambda));
        if (!dual.is_unit()) {
            const auto table = multigraded_betti_oracle(dual, 24);
            const auto totals = oracle_totals(table);
            const auto shifts = oracle_shifts(table);
            for (int k = 1; k <= 3; ++k) {
                const std::size_t expected = summary.betti[static_cast<std::size_t>(k - 1)];
                if (expected == 0) {
                    expect(!totals.contains(k), "oracle has no extra rows");
                } else {
                    expect(totals.at(k) == expected, "oracle totals match");
                    expect(shifts.at(k) ==
                               std::set<int>{summary.shifts[static_cast<std::size_t>(k - 1)]},
                           "oracle shifts are concentrated and match");
                }
            }
        }

        const int m = static_cast<int>(lambda.rows());
        if (m > 1 && summary.betti[2] > 0) {
            expect(summary.regularity == lambda.cols() + m - 3, "regularity formula");
            expect(summary.projective_dimension == 3, "projective dimension 3");
        }
        expect(summary.is_linear, "linear resolution");
        expect(x.faces.size() == x.edges.size() - x.vertices.size() + 1, "Euler count");
    }
}

void criterion_6() {
    const LabeledComplex x = build_complex(Partition({4, 4, 3}));
    const CellularFreeComplex c = boundary_maps(x);

    expect(incidence_matrix(x) == RationalMatrix::from_int_rows({
                                      {1, 0, 0, 0, 0, 0, 0, 0, 0},
                                      {-1, 1, 0, 1, 0, 0, 0, 0, 0},
                                      {0, -1, 1, 0, 1, 0, 0, 0, 0},
                                      {0, 0, -1, 0, 0, 1, 0, 0, 0},
                                      {0, 0, 0, -1, 0, 0, 1, 0, 0},
                                      {0, 0, 0, 0, -1, 0, -1, 1, 1},
                                      {0, 0, 0, 0, 0, -1, 0, -1, 0},
                                      {0, 0, 0, 0, 0, 0, 0, 0, -1},
                                  }),
           "incidence matrix matches the displayed one");
    expect(face_cycle_matrix(x) ==
               RationalMatrix::from_int_rows({{0, 0},
                                              {1, 0},
                                              {0, 1},
                                              {-1, 0},
                                              {1, -1},
                                              {0, 1},
                                              {-1, 0},
                                              {0, -1},
                                              {0, 0}}),
           "face cycle matrix matches the displayed one");

    auto entry = [](int sign, int var) { return SignedVariable{sign, static_cast<std::size_t>(var - 1)}; };
    MonomialMatrix d1(8, 9);
    const std::vector<std::tuple<int, int, int, int>> d1_entries = {
        {0, 0, 1, 1},  {1, 0, -1, 2}, {1, 1, 1, 2},  {2, 1, -1, 3}, {2, 2, 1, 3},
        {3, 2, -1, 4}, {1, 3, 1, 1},  {4, 3, -1, 2}, {2, 4, 1, 1},  {5, 4, -1, 2},
        {3, 5, 1, 1},  {6, 5, -1, 2}, {4, 6, 1, 2},  {5, 6, -1, 3}, {5, 7, 1, 3},
        {6, 7, -1, 4}, {5, 8, 1, 2},  {7, 8, -1, 3}};
    for (const auto& [r, col, sign, var] : d1_entries)
        d1.at(static_cast<std::size_t>(r), static_cast<std::size_t>(col)) = entry(sign, var);
    expect(c.d1.entries == d1.entries, "d1 matches the displayed matrix");

    MonomialMatrix d2(9, 2);
    const std::vector<std::tuple<int, int, int, int>> d2_entries = {
        {1, 0, 1, 1}, {3, 0, -1, 2}, {4, 0, 1, 3}, {6, 0, -1, 2},
        {2, 1, 1, 1}, {4, 1, -1, 3}, {5, 1, 1, 4}, {7, 1, -1, 2}};
    for (const auto& [r, col, sign, var] : d2_entries)
        d2.at(static_cast<std::size_t>(r), static_cast<std::size_t>(col)) = entry(sign, var);
    expect(c.d2.entries == d2.entries, "d2 matches the displayed matrix");

    expect(c.betti == std::array<std::size_t, 3>{8, 9, 2}, "betti (8, 9, 2)");
    expect(c.shifts == std::array<int, 3>{5, 6, 7}, "shifts (5, 6, 7)");
    expect(verify_resolution(Partition({4, 4, 3})).regularity == 4, "regularity 4");
}

void criterion_7() {
    for (const Partition& lambda : staircase_partitions(3, 4)) {
        const MonomialIdeal i = strongly_stable_from_partition(lambda);
        const std::vector<Monomial> dual = lcm_dual_generators(i);
        for (int r = 1; r <= 3; ++r)
            expect(toric_relations(i.generators(), r) == toric_relations(dual, r),
                   "relation sets coincide through degree 3");
        expect(fiber_dimension(i) == static_cast<std::size_t>(lambda.cols()),
               "fiber dimension of the ideal is lambda_1");
        const MonomialIdeal dual_ideal = lcm_dual(i);
        if (!dual_ideal.is_unit())
            expect(fiber_dimension(dual_ideal) == static_cast<std::size_t>(lambda.cols()),
                   "fiber dimension of the dual is lambda_1");
        expect(symmetric_minors(lambda).relations == toric_relations(i, 2),
               "degree-2 relations equal the minor set");
    }
}

void criterion_8() {
    const auto koszul = multigraded_betti_oracle(ideal(2, {{1, 0}, {0, 1}}));
    expect(oracle_totals(koszul) == std::map<int, std::size_t>{{1, 2}, {2, 1}},
           "Koszul totals (2, 1)");
    expect(oracle_shifts(koszul).at(1) == std::set<int>{1} &&
               oracle_shifts(koszul).at(2) == std::set<int>{2},
           "Koszul shifts (1, 2)");

    const auto square = multigraded_betti_oracle(ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
    expect(oracle_totals(square) == std::map<int, std::size_t>{{1, 3}, {2, 2}},
           "(x^2, xy, y^2) totals (3, 2)");
    expect(oracle_shifts(square).at(1) == std::set<int>{2} &&
               oracle_shifts(square).at(2) == std::set<int>{3},
           "(x^2, xy, y^2) shifts (2, 3)");
}

} // namespace

int main() {
    criterion(1, "worked examples, bit-exact", criterion_1);
    criterion(2, "double-dual law on 500 random ideals", criterion_2);
    criterion(3, "product law on 200 equigenerated pairs", criterion_3);
    criterion(4, "primary decomposition of Ferrers duals for every partition with m <= 4, n <= 5",
              criterion_4);
    criterion(5, "cellular resolution checks for every staircase lambda with m <= 4, n <= 6",
              criterion_5);
    criterion(6, "lambda = (4,4,3) golden matrices and invariants", criterion_6);
    criterion(7, "fiber isomorphism data for strongly stable lambda with m <= 3, n <= 4",
              criterion_7);
    criterion(8, "multigraded betti oracle reproduces known resolutions", criterion_8);

    if (failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria failed\n";
    return 1;
}
