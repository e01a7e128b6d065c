// Acceptance suite: end-to-end checks of the algebraic identities the
// library is built around, each with an exactness requirement and a wall
// clock budget.  One summary line is printed per criterion.

#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cohall/jsonio.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cohall;
using testutil::P;

namespace {

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
    if (!cond) throw check_failure(what);
}

void run_criterion(int id, const std::string& name, double limit_seconds,
                   const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
        body();
    } catch (const std::exception& e) {
        failure = e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char line[256];
    std::snprintf(line, sizeof(line), "criterion %02d: %s  (%.2f s / %.0f s)  %s", id,
                  failure.empty() ? "PASS" : "FAIL", elapsed, limit_seconds, name.c_str());
    std::cout << line << std::endl;
    if (!failure.empty()) std::cout << "    reason: " << failure << std::endl;
    REQUIRE(failure.empty());
    CHECK(elapsed < limit_seconds);
}

FixedComponent grassmann_component(const std::vector<int>& vs) {
    FixedComponent f;
    for (int vj : vs) f.decomposition.slots.push_back({{vj}, {1}});
    f.leaf_classes.assign(vs.size(), Poly(1L));
    return f;
}

Decomposition unit_slots(int n) {
    Decomposition d;
    for (int j = 0; j < n; ++j) d.slots.push_back({DimVec{0}, DimVec{1}});
    return d;
}

std::vector<std::vector<int>> all_chamber_words(int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> word(static_cast<size_t>(k));
    std::iota(word.begin(), word.end(), 1);
    do out.push_back(word);
    while (std::next_permutation(word.begin(), word.end()));
    return out;
}

// All ways to distribute total over slots.
void distributions(int slots, int total, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (slots == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int x = 0; x <= total; ++x) {
        cur.push_back(x);
        distributions(slots - 1, total - x, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> distributions(int slots, int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    distributions(slots, total, cur, out);
    return out;
}

} // namespace

TEST_CASE("criterion 1: cotangent line against the axiom-system oracle") {
    run_criterion(1, "T*P^1 stable envelopes equal the unique axiom solution", 1.0, [] {
        Quiver q = testutil::a1();
        for (const auto& word : all_chamber_words(2)) {
            Chamber c;
            c.word = word;
            for (int m = 1; m <= 2; ++m) {
                std::vector<int> vs{0, 0};
                vs[static_cast<size_t>(m - 1)] = 1;
                RatFun stab = stab_psi(q, grassmann_component(vs), c);
                expect(stab.is_poly(), "stable envelope is not polynomial");
                expect(stab.num() == oracle::mo_axiom_solution(2, word, m),
                       "stab_psi disagrees with the axiom oracle");
            }
        }
    });
}

TEST_CASE("criterion 2: weight-function closed form") {
    run_criterion(2, "identity-chamber envelopes match the closed-form products (n <= 5)", 10.0, [] {
        Quiver q = testutil::a1();
        for (int n = 1; n <= 5; ++n) {
            Chamber id = Chamber::identity(static_cast<size_t>(n));
            for (int m = 1; m <= n; ++m) {
                std::vector<int> vs(static_cast<size_t>(n), 0);
                vs[static_cast<size_t>(m - 1)] = 1;
                RatFun stab = stab_psi(q, grassmann_component(vs), id);
                expect(stab.is_poly(), "stable envelope is not polynomial");
                expect(stab.num() == oracle::weight_function(n, m),
                       "slot " + std::to_string(m) + " of n=" + std::to_string(n) +
                           " disagrees with the product oracle");
            }
        }
    });
}

TEST_CASE("criterion 3: stable-envelope axioms on cotangent grassmannians") {
    run_criterion(3, "diagonal, support and degree axioms on T*Gr(k,n), n <= 4, all chambers",
                  60.0, [] {
        Quiver q = testutil::a1();
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= n; ++k)
                for (const auto& word : all_chamber_words(n)) {
                    Chamber c;
                    c.word = word;
                    Decomposition d = unit_slots(n);
                    RestrictionTable table = enumerate_fixed_points(q, {k}, d, c);
                    std::vector<RatFun> stabs;
                    for (const auto& comp : table.components) {
                        FixedComponent f;
                        for (size_t j = 0; j < comp.size(); ++j)
                            f.decomposition.slots.push_back({comp[j], DimVec{1}});
                        f.leaf_classes.assign(comp.size(), Poly(1L));
                        stabs.push_back(stab_psi(q, f, c));
                    }
                    AxiomReport report = check_axioms(q, {k}, d, c, table, stabs);
                    for (const auto& entry : report.checks)
                        expect(entry.pass, "axiom '" + entry.kind + "' fails on T*Gr(" +
                                               std::to_string(k) + "," + std::to_string(n) +
                                               ") at point " + entry.point_id + ": " +
                                               entry.detail);
                }
    });
}

TEST_CASE("criterion 4: split position invariance") {
    run_criterion(4, "every top-level split of the recursion yields the same class (k <= 4)",
                  60.0, [] {
        for (const Quiver& q : {testutil::a1(), testutil::jordan()}) {
            for (int k = 2; k <= 4; ++k) {
                std::vector<std::vector<int>> words;
                words.push_back(all_chamber_words(k).front());
                words.push_back(all_chamber_words(k).back());
                for (const auto& word : words) {
                    Chamber c;
                    c.word = word;
                    for (const auto& vs : distributions(k, 2)) {
                        FixedComponent f = grassmann_component(vs);
                        RatFun reference = stab_psi(q, f, c, 1);
                        for (int cut = 2; cut < k; ++cut)
                            expect(stab_psi(q, f, c, static_cast<size_t>(cut)) == reference,
                                   "split at " + std::to_string(cut) + " differs for k=" +
                                       std::to_string(k));
                    }
                }
            }
        }
    });
}

TEST_CASE("criterion 5: the algebra morphism identity") {
    run_criterion(5, "e(h g_v) stab_product(g1,g2) = m_tau(psi g1, psi g2), 24 random pairs",
                  60.0, [] {
        std::mt19937_64 rng(20260811);
        std::uniform_int_distribution<int> dim(0, 2);
        for (const Quiver& q : {testutil::a1(), testutil::jordan()}) {
            int done = 0;
            while (done < 12) {
                DimVec v1{dim(rng)}, w1{dim(rng)}, v2{dim(rng)}, w2{dim(rng)};
                CohaElement g1 = testutil::random_coha_element(rng, q, v1, w1, 1, 2);
                CohaElement g2 = testutil::random_coha_element(rng, q, v2, w2, 1, 2);
                StabProduct sp = stab_product(g1, g2);
                RatFun lhs = RatFun(class_gauge(q, sp.v, 1).euler_poly()) * sp.value;
                CohaElement rhs = coha_mul_tau(psi(g1), psi(g2));
                expect(lhs == RatFun(rhs.poly), "morphism identity fails at grades (" +
                                                     dim_print(v1) + "|" + dim_print(w1) +
                                                     "), (" + dim_print(v2) + "|" +
                                                     dim_print(w2) + ")");
                ++done;
            }
        }
    });
}

TEST_CASE("criterion 6: CoHA algebra laws") {
    run_criterion(6, "m and m_tau are associative, unital and graded (A1, Jordan, A2)", 60.0, [] {
        std::mt19937_64 rng(42);
        auto check_quiver = [&](const Quiver& q, const std::vector<std::pair<DimVec, DimVec>>&
                                                     grades) {
            CohaElement one = coha_unit(q);
            for (int it = 0; it < 4; ++it) {
                const auto& [va, wa] = grades[static_cast<size_t>(it) % grades.size()];
                const auto& [vb, wb] = grades[static_cast<size_t>(it + 1) % grades.size()];
                const auto& [vc, wc] = grades[static_cast<size_t>(it + 2) % grades.size()];
                CohaElement f = testutil::random_coha_element(rng, q, va, wa, 1, 2);
                CohaElement g = testutil::random_coha_element(rng, q, vb, wb, 1, 2);
                CohaElement h = testutil::random_coha_element(rng, q, vc, wc, 1, 2);

                expect(coha_mul(coha_mul(f, g), h).poly == coha_mul(f, coha_mul(g, h)).poly,
                       "m is not associative");
                expect(coha_mul_tau(coha_mul_tau(f, g), h).poly ==
                           coha_mul_tau(f, coha_mul_tau(g, h)).poly,
                       "m_tau is not associative");
                expect(coha_mul(one, f).poly == f.poly && coha_mul(f, one).poly == f.poly,
                       "m unit law fails");
                expect(coha_mul_tau(one, f).poly == f.poly && coha_mul_tau(f, one).poly == f.poly,
                       "m_tau unit law fails");
                CohaElement fg = coha_mul_tau(f, g);
                expect(fg.v == dim_add(f.v, g.v) && fg.w == dim_add(f.w, g.w),
                       "grading is not additive");
            }
        };
        check_quiver(testutil::a1(), {{{1}, {0}}, {{1}, {1}}, {{2}, {0}}, {{0}, {1}}});
        check_quiver(testutil::jordan(), {{{1}, {0}}, {{1}, {1}}, {{2}, {0}}, {{0}, {1}}});
        check_quiver(testutil::a2(), {{{1, 0}, {0, 0}},
                                      {{0, 1}, {0, 1}},
                                      {{1, 1}, {0, 0}},
                                      {{0, 1}, {1, 0}}});
    });
}

TEST_CASE("criterion 7: abelianization factorization") {
    run_criterion(7, "m_tau(q_* f1, q_* f2) = q_*(e(T*Rep[-1]) e(h g[1]) f1 f2)", 30.0, [] {
        std::mt19937_64 rng(77);
        for (const Quiver& q : {testutil::a1(), testutil::jordan()}) {
            std::vector<std::pair<DimVec, DimVec>> splits = {
                {{2}, {1}}, {{1}, {2}}, {{2}, {2}}};
            for (const auto& [v1, v2] : splits) {
                DimVec w1{1}, w2{0};
                for (int it = 0; it < 2; ++it) {
                    // Sub-block-symmetric inputs: fully symmetric in their own
                    // blocks before relabeling.
                    Poly f1 = testutil::symmetrize_full(
                        testutil::random_poly(rng, testutil::grade_symbols(q, v1, w1), 2, 3), v1);
                    Poly f2 = testutil::symmetrize_full(
                        testutil::random_poly(rng, testutil::grade_symbols(q, v2, w2), 2, 3), v2);
                    Poly qf1 = flag_pushforward(f1, v1);
                    Poly qf2 = flag_pushforward(f2, v2);
                    CohaElement lhs =
                        coha_mul_tau(CohaElement(q, v1, w1, qf1), CohaElement(q, v2, w2, qf2));

                    GradeSplit split{v1, v2, w1, w2};
                    Poly f2r = f2.rename(
                        [&](const Symbol& s) { return detail::offset_symbol(s, v1, w1); });
                    Poly kernel =
                        grade_part(class_trep(q, split.v(), split.w()), split, -1).euler_poly() *
                        grade_part(class_gauge(q, split.v(), 1), split, +1).euler_poly();
                    Poly rhs = flag_pushforward(kernel * f1 * f2r, split.v());
                    expect(lhs.poly == rhs, "factorization fails for v1=" + dim_print(v1) +
                                                ", v2=" + dim_print(v2));
                }
            }
        }
    });
}

TEST_CASE("criterion 8: flag pushforward against the bialternant") {
    run_criterion(8, "dominant monomials push to Schur polynomials (n <= 4, parts <= 3)", 10.0, [] {
        for (int n = 1; n <= 4; ++n) {
            std::vector<std::vector<int>> lambdas;
            std::vector<int> lambda(static_cast<size_t>(n), 0);
            while (true) {
                lambdas.push_back(lambda);
                int i = n - 1;
                while (i >= 0) {
                    int cap = i == 0 ? 3 : lambda[static_cast<size_t>(i - 1)];
                    if (lambda[static_cast<size_t>(i)] < cap) {
                        ++lambda[static_cast<size_t>(i)];
                        for (int j = i + 1; j < n; ++j) lambda[static_cast<size_t>(j)] = 0;
                        break;
                    }
                    --i;
                }
                if (i < 0) break;
            }
            for (const auto& lam : lambdas) {
                Poly dominant(1L);
                for (int i = 0; i < n; ++i)
                    dominant *= Poly::var(Symbol::chern(0, i + 1),
                                          lam[static_cast<size_t>(i)] + n - 1 - i);
                expect(flag_pushforward(dominant, {n}) == oracle::schur_bialternant(lam, n),
                       "pushforward disagrees with the bialternant for n=" + std::to_string(n));
            }
        }
    });
}

TEST_CASE("criterion 9: the R-matrix suite") {
    run_criterion(9, "triangularity, unitarity, braid relation, and the 2-slot R-matrix", 120.0, [] {
        Quiver q = testutil::a1();

        // Triangularity of all six chamber matrices for v in {1,2}, plus
        // the unitarity and braid checks.
        Decomposition d3 = unit_slots(3);
        for (int v : {1, 2}) {
            for (const auto& word : all_chamber_words(3)) {
                Chamber c;
                c.word = word;
                RestrictionTable table = enumerate_fixed_points(q, {v}, d3, c);
                StabMatrix m = stab_matrix(q, {v}, d3, c, table);
                expect(stab_matrix_triangular(m, q, {v}, d3, table),
                       "stable envelope matrix is not triangular for v=" + std::to_string(v));
            }
            YbeReport report = check_ybe(q, {v}, d3);
            for (const auto& entry : report.checks)
                expect(entry.pass,
                       entry.name + " fails for v=" + std::to_string(v) + ": " + entry.detail);
        }

        // The wall-crossing matrix of the criterion-1 classes.
        Decomposition d2 = unit_slots(2);
        Chamber id = Chamber::identity(2);
        Chamber rev;
        rev.word = {2, 1};
        StabMatrix from = stab_matrix(q, {1}, d2, id, enumerate_fixed_points(q, {1}, d2, id));
        StabMatrix to = stab_matrix(q, {1}, d2, rev, enumerate_fixed_points(q, {1}, d2, rev));
        RatMat r = r_matrix(from, to);
        RatFun u(P("a(1,1) - a(1,2)"));
        RatFun scale = RatFun(Poly(-1L)) / (u - RatFun(P("h")));
        expect(r[0][0] == scale * u && r[1][1] == scale * u &&
                   r[0][1] == scale * RatFun(P("h")) && r[1][0] == scale * RatFun(P("h")),
               "2-slot R-matrix differs from (-1/(u-h))[[u,h],[h,u]]");
    });
}

// --- criterion 10: CLI determinism and formats -------------------------------

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CliResult run_cli(const std::string& args, const std::filesystem::path& dir) {
    static int counter = 0;
    std::filesystem::path out = dir / ("out" + std::to_string(counter++) + ".txt");
    std::string cmd = std::string(COHALL_CLI_PATH) + " " + args + " > " + out.string() + " 2> " +
                      (dir / "err.txt").string();
    int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    return r;
}

} // namespace

TEST_CASE("criterion 10: determinism, formats and exit codes") {
    run_criterion(10, "byte-identical reruns, reparseable artifacts, negative control", 60.0, [] {
        namespace fs = std::filesystem;
        fs::path dir = fs::temp_directory_path() / "cohall-acceptance";
        fs::remove_all(dir);
        fs::create_directories(dir);
        std::string a1 = std::string(COHALL_DATA_DIR) + "/quivers/a1.json";
        std::string jordan = std::string(COHALL_DATA_DIR) + "/quivers/jordan.json";

        // Golden outputs.
        std::string stab_args = "stab --quiver " + a1 + " --v 1 --w 1,1 --chamber 1,2 --component 1,0";
        CliResult stab1 = run_cli(stab_args, dir);
        expect(stab1.exit_code == 0, "stab exited with " + std::to_string(stab1.exit_code));
        expect(stab1.out == "s(1,1) - a(1,2) + h\n", "unexpected stab output: " + stab1.out);

        CliResult mul = run_cli("mul --quiver " + jordan + " --left 1@(1,0) --right 1@(1,0)", dir);
        expect(mul.exit_code == 0 && mul.out == "2*h\n", "unexpected mul output: " + mul.out);

        // Determinism across reruns and --jobs settings.
        CliResult stab2 = run_cli(stab_args, dir);
        CliResult stab4 = run_cli(stab_args + " --jobs 4", dir);
        expect(stab1.out == stab2.out && stab1.out == stab4.out,
               "outputs differ across reruns or --jobs settings");

        // Determinism through the cache: cold write, then hit.
        fs::path cache = dir / "cache";
        CliResult cold = run_cli(stab_args + " --cache-dir " + cache.string(), dir);
        CliResult warm = run_cli(stab_args + " --cache-dir " + cache.string(), dir);
        expect(cold.out == warm.out && cold.out == stab1.out, "cache changes the bytes");
        expect(!fs::is_empty(cache), "cache directory stayed empty");

        // Artifacts re-parse.
        RatFun reparsed = ratfun_parse(stab1.out.substr(0, stab1.out.size() - 1));
        expect(reparsed == RatFun(P("s(1,1) - a(1,2) + h")), "stab output does not re-parse");
        Poly mul_reparsed = poly_parse(mul.out.substr(0, mul.out.size() - 1));
        expect(mul_reparsed == P("2*h"), "mul output does not re-parse");

        CliResult rmat = run_cli(
            "rmatrix --quiver " + a1 + " --v 1 --w 1,1 --from 1,2 --to 2,1", dir);
        expect(rmat.exit_code == 0, "rmatrix failed");
        json rj = json::parse(rmat.out);
        for (const auto& row : rj["entries"])
            for (const auto& e : row) ratfun_parse(e.get<std::string>());

        // Axiom suite passes; the corrupted class is refused with exit 1.
        CliResult ok = run_cli("verify-axioms --quiver " + a1 + " --v 1 --w 1,1,1", dir);
        expect(ok.exit_code == 0, "verify-axioms exited with " + std::to_string(ok.exit_code));
        expect(json::parse(ok.out)["pass"].get<bool>(), "verify-axioms report not passing");

        CliResult bad = run_cli("verify-axioms --quiver " + a1 +
                                    " --v 1 --w 1,1 --chamber 1,2 \"--override=0=s(1,1) - "
                                    "a(1,2) + h + 1\"",
                                dir);
        expect(bad.exit_code == 1,
               "corrupted class exited with " + std::to_string(bad.exit_code));
        expect(!json::parse(bad.out)["pass"].get<bool>(), "corrupted class still passes");

        // Unparsable input is an input error (exit 2).
        CliResult garbage = run_cli("mul --quiver " + a1 + " --left 'q(1@(1,0)' --right 1@(1,0)", dir);
        expect(garbage.exit_code == 2, "parse error exited with " + std::to_string(garbage.exit_code));

        fs::remove_all(dir);
    });
}
