// cohall: exact shuffle-algebra computations for framed quivers.
//
// Subcommands cover the CoHA products (mul, mul-tau, mul-ab), stable
// envelopes in tautological presentation (stab, psi, pushforward),
// fixed-point restriction and the axiom suite (restrict, verify-axioms),
// and wall-crossing matrices (rmatrix, ybe).
//
// Exit status: 0 success, 1 verification failure, 2 input or computation
// error.  Identical inputs produce byte-identical outputs.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cohall/jsonio.hpp"

using namespace cohall;

namespace {

struct CommonOpts {
    std::string quiver_file;
    std::string output;
    std::string cache_dir;
    bool no_cache = false;
    std::string h_sign = "+";
    int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_quiver = true) {
    if (needs_quiver)
        cmd->add_option("--quiver", opts.quiver_file, "quiver spec file (JSON)")->required();
    cmd->add_option("--output,-o", opts.output, "output path (default: stdout)");
    cmd->add_option("--cache-dir", opts.cache_dir,
                    "result cache directory (default: $COHALL_CACHE_DIR)");
    cmd->add_flag("--no-cache", opts.no_cache, "recompute even when a cache directory is set");
    cmd->add_option("--h-sign", opts.h_sign, "sign convention for h: + or - (default +)")
        ->check(CLI::IsMember({"+", "-"}));
    cmd->add_option("--jobs", opts.jobs, "bound on worker threads")->check(CLI::PositiveNumber);
}

bool flip_wanted(const CommonOpts& o) { return o.h_sign == "-"; }

std::optional<ResultCache> open_cache(const CommonOpts& o) {
    std::string dir = o.cache_dir;
    if (dir.empty())
        if (const char* env = std::getenv("COHALL_CACHE_DIR")) dir = env;
    if (dir.empty() || o.no_cache) return std::nullopt;
    return ResultCache(dir);
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(o.output, std::ios::binary | std::ios::trunc);
    if (!out) throw input_error("cannot write output file: " + o.output);
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// --- small argument grammars -------------------------------------------------

DimVec parse_dimvec(const std::string& text) {
    DimVec out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(part, &used));
            while (used < part.size() && std::isspace(static_cast<unsigned char>(part[used]))) ++used;
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw input_error("bad dimension vector entry: '" + part + "'");
        }
    }
    if (out.empty()) throw input_error("empty dimension vector");
    return out;
}

// Slot lists: ';' separates slots; a bare comma list over a one-vertex
// quiver is read as one scalar slot per entry.
std::vector<DimVec> parse_slots(const std::string& text, const Quiver& q) {
    std::vector<DimVec> out;
    if (text.find(';') != std::string::npos) {
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ';')) out.push_back(parse_dimvec(part));
    } else if (q.num_vertices() == 1) {
        for (int x : parse_dimvec(text)) out.push_back({x});
    } else {
        out.push_back(parse_dimvec(text));
    }
    return out;
}

Chamber parse_chamber(const std::string& text, size_t k) {
    Chamber c;
    if (text.empty()) return Chamber::identity(k);
    for (int x : parse_dimvec(text)) c.word.push_back(x);
    c.validate(k);
    return c;
}

// "POLY@(v,w)" or "POLY@(v|w)"; POLY is inline canonical text or a file
// path.  Over a one-vertex quiver "(1,0)" reads as v=1, w=0.
struct GradedPoly {
    Poly poly;
    DimVec v, w;
};

Poly parse_poly_arg(const std::string& text) {
    if (std::filesystem::exists(text)) {
        std::string body = read_file(text);
        while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.pop_back();
        return poly_parse(body);
    }
    return poly_parse(text);
}

RatFun parse_ratfun_arg(const std::string& text) {
    if (std::filesystem::exists(text)) {
        std::string body = read_file(text);
        while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.pop_back();
        return ratfun_parse(body);
    }
    return ratfun_parse(text);
}

GradedPoly parse_graded_poly(const std::string& spec, const Quiver& q) {
    size_t at = spec.rfind('@');
    if (at == std::string::npos)
        throw input_error("expected POLY@(v,w) or POLY@(v|w): '" + spec + "'");
    std::string grade = spec.substr(at + 1);
    if (grade.size() < 2 || grade.front() != '(' || grade.back() != ')')
        throw input_error("grade must be parenthesized: '" + grade + "'");
    grade = grade.substr(1, grade.size() - 2);
    GradedPoly out;
    size_t bar = grade.find('|');
    if (bar != std::string::npos) {
        out.v = parse_dimvec(grade.substr(0, bar));
        out.w = parse_dimvec(grade.substr(bar + 1));
    } else if (q.num_vertices() == 1) {
        DimVec pair = parse_dimvec(grade);
        if (pair.size() != 2) throw input_error("grade over one vertex is (v,w): '" + grade + "'");
        out.v = {pair[0]};
        out.w = {pair[1]};
    } else {
        throw input_error("grade over several vertices is (v1,v2,..|w1,w2,..): '" + grade + "'");
    }
    out.poly = parse_poly_arg(spec.substr(0, at));
    return out;
}

Decomposition decomposition_of(const std::vector<DimVec>& vs, const std::vector<DimVec>& ws) {
    if (vs.size() != ws.size())
        throw input_error("component has " + std::to_string(vs.size()) + " slots, expected " +
                          std::to_string(ws.size()));
    Decomposition d;
    for (size_t j = 0; j < ws.size(); ++j) d.slots.push_back({vs[j], ws[j]});
    return d;
}

DimVec sum_slots(const std::vector<DimVec>& slots) {
    DimVec t = slots.at(0);
    for (size_t j = 1; j < slots.size(); ++j) t = dim_add(t, slots[j]);
    return t;
}

// Restriction table: built-in enumeration when possible, file otherwise.
RestrictionTable load_table(const std::string& table_file, const Quiver& q, const DimVec& v,
                            const Decomposition& d, const Chamber& chamber) {
    if (!table_file.empty()) return table_from_file(table_file, q);
    return enumerate_fixed_points(q, v, d, chamber);
}

// --- per-command state --------------------------------------------------------

struct MulArgs {
    CommonOpts common;
    std::string left, right;
};

struct StabArgs {
    CommonOpts common;
    std::string v, w, chamber, component;
    std::vector<std::string> leaves;
};

struct PsiArgs {
    CommonOpts common;
    std::string v, w, input;
};

struct PushArgs {
    CommonOpts common;
    std::string v, input;
};

struct RestrictArgs {
    CommonOpts common;
    std::string v, w, chamber, table, input, point;
};

struct VerifyArgs {
    CommonOpts common;
    std::string v, w, chamber, table;
    std::vector<std::string> overrides;
};

struct RmatrixArgs {
    CommonOpts common;
    std::string v, w, from, to, table;
};

struct YbeArgs {
    CommonOpts common;
    std::string v, w, table;
};

int run_mul(const MulArgs& a, int twist) {
    Quiver q = quiver_from_file(a.common.quiver_file);
    GradedPoly left = parse_graded_poly(a.left, q);
    GradedPoly right = parse_graded_poly(a.right, q);
    if (flip_wanted(a.common)) {
        left.poly = left.poly.flip_h();
        right.poly = right.poly.flip_h();
    }
    Poly result;
    if (twist == 2) {
        AbelianElement f(q, left.v, left.w, left.poly), g(q, right.v, right.w, right.poly);
        result = coha_mul_ab_tau(f, g).poly;
    } else {
        CohaElement f(q, left.v, left.w, left.poly), g(q, right.v, right.w, right.poly);
        result = twist ? coha_mul_tau(f, g).poly : coha_mul(f, g).poly;
    }
    if (flip_wanted(a.common)) result = result.flip_h();
    emit(a.common, poly_print(result));
    return 0;
}

int run_stab(const StabArgs& a) {
    Quiver q = quiver_from_file(a.common.quiver_file);
    std::vector<DimVec> ws = parse_slots(a.w, q);
    std::vector<DimVec> vs = parse_slots(a.component, q);
    Decomposition d = decomposition_of(vs, ws);
    d.validate(q);
    DimVec v_total = sum_slots(vs);
    DimVec declared = parse_dimvec(a.v);
    if (q.num_vertices() == 1 && declared.size() == 1 && declared != v_total)
        throw input_error("--component sums to v=" + dim_print(v_total) + ", but --v is " +
                          dim_print(declared));
    Chamber chamber = parse_chamber(a.chamber, d.size());

    FixedComponent f = FixedComponent::with_unit_leaves(d);
    for (const std::string& spec : a.leaves) {
        size_t eq = spec.find('=');
        if (eq == std::string::npos) throw input_error("--leaf expects J=POLY: '" + spec + "'");
        size_t j = static_cast<size_t>(std::stoul(spec.substr(0, eq)));
        if (j < 1 || j > d.size()) throw input_error("--leaf slot out of range: '" + spec + "'");
        Poly leaf = parse_poly_arg(spec.substr(eq + 1));
        f.leaf_classes[j - 1] = flip_wanted(a.common) ? leaf.flip_h() : leaf;
    }

    std::optional<ResultCache> cache = open_cache(a.common);
    RatFun r = stab_psi_cached(q, f, chamber, cache ? &*cache : nullptr,
                               flip_wanted(a.common) ? '-' : '+');
    if (flip_wanted(a.common)) r = r.flip_h();
    emit(a.common, ratfun_print(r));
    return 0;
}

int run_psi(const PsiArgs& a) {
    Quiver q = quiver_from_file(a.common.quiver_file);
    DimVec v = parse_dimvec(a.v), w = parse_dimvec(a.w);
    Poly input = parse_poly_arg(a.input);
    if (flip_wanted(a.common)) input = input.flip_h();
    CohaElement gamma(q, v, w, input);
    Poly result = psi(gamma).poly;
    if (flip_wanted(a.common)) result = result.flip_h();
    emit(a.common, poly_print(result));
    return 0;
}

int run_pushforward(const PushArgs& a) {
    Quiver q = quiver_from_file(a.common.quiver_file);
    DimVec v = parse_dimvec(a.v);
    q.check_dims(v, "pushforward v");
    Poly input = parse_poly_arg(a.input);
    if (flip_wanted(a.common)) input = input.flip_h();
    Poly result = flag_pushforward(input, v);
    if (flip_wanted(a.common)) result = result.flip_h();
    emit(a.common, poly_print(result));
    return 0;
}

int run_restrict(const RestrictArgs& a) {
    Quiver q = quiver_from_file(a.common.quiver_file);
    std::vector<DimVec> ws = parse_slots(a.w, q);
    DimVec v = parse_dimvec(a.v);
    if (q.num_vertices() == 1 && v.size() != 1) throw input_error("--v must be a dimension vector");
    Decomposition d;
    for (const DimVec& wj : ws) d.slots.push_back({dim_zero(q.num_vertices()), wj});
    Chamber chamber = parse_chamber(a.chamber, d.size());
    RestrictionTable table = load_table(a.table, q, v, d, chamber);

    RatFun input = parse_ratfun_arg(a.input);
    if (flip_wanted(a.common)) input = input.flip_h();
    auto show = [&](const RatFun& r) {
        return ratfun_print(flip_wanted(a.common) ? r.flip_h() : r);
    };
    if (!a.point.empty()) {
        for (const auto& p : table.points)
            if (p.id == a.point) {
                emit(a.common, show(restrict_at(input, p)));
                return 0;
            }
        throw input_error("no fixed point with id '" + a.point + "'");
    }
    std::string out;
    for (const auto& p : table.points) out += p.id + "\t" + show(restrict_at(input, p)) + "\n";
    emit(a.common, out);
    return 0;
}

int run_verify(const VerifyArgs& a) {
    Quiver q = quiver_from_file(a.common.quiver_file);
    std::vector<DimVec> ws = parse_slots(a.w, q);
    DimVec v = parse_dimvec(a.v);
    Decomposition base;
    for (const DimVec& wj : ws) base.slots.push_back({dim_zero(q.num_vertices()), wj});

    std::vector<Chamber> chambers;
    if (!a.chamber.empty()) {
        chambers.push_back(parse_chamber(a.chamber, ws.size()));
    } else {
        std::vector<int> word(ws.size());
        std::iota(word.begin(), word.end(), 1);
        do {
            Chamber c;
            c.word = word;
            chambers.push_back(c);
        } while (std::next_permutation(word.begin(), word.end()));
    }

    std::optional<ResultCache> cache = open_cache(a.common);
    json chambers_json = json::array();
    bool all_pass = true;
    for (const Chamber& chamber : chambers) {
        RestrictionTable table = load_table(a.table, q, v, base, chamber);
        if (table.components.empty())
            throw input_error("restriction table carries no components; add a \"components\" section");
        std::vector<RatFun> stabs(table.components.size());
        parallel_for(stabs.size(), [&](size_t comp) {
            Decomposition d = decomposition_of(table.components[comp],
                                               [&] {
                                                   std::vector<DimVec> out;
                                                   for (const auto& s : base.slots)
                                                       out.push_back(s.second);
                                                   return out;
                                               }());
            stabs[comp] = stab_psi_cached(q, FixedComponent::with_unit_leaves(d), chamber,
                                          cache ? &*cache : nullptr,
                                          flip_wanted(a.common) ? '-' : '+');
        });
        for (const std::string& spec : a.overrides) {
            size_t eq = spec.find('=');
            if (eq == std::string::npos)
                throw input_error("--override expects COMPONENT=CLASS: '" + spec + "'");
            size_t idx = static_cast<size_t>(std::stoul(spec.substr(0, eq)));
            if (idx >= stabs.size()) throw input_error("--override component out of range");
            RatFun cls = parse_ratfun_arg(spec.substr(eq + 1));
            stabs[idx] = flip_wanted(a.common) ? cls.flip_h() : cls;
        }

        AxiomReport report = check_axioms(q, v, base, chamber, table, stabs);
        all_pass = all_pass && report.all_pass();
        json cj = axiom_report_json(report);
        cj["chamber"] = chamber.word;
        chambers_json.push_back(std::move(cj));

        std::cerr << "chamber " << chamber.canonical_text() << ": "
                  << (report.all_pass() ? "all axioms hold" : "FAILURES") << "\n";
        for (const auto& c : report.checks)
            if (!c.pass)
                std::cerr << "  component " << c.component << " at point " << c.point_id << " ["
                          << c.kind << "]: " << c.detail << "\n";
    }

    json out{{"command", "verify-axioms"},
             {"quiver", hex64(fnv1a64(q.canonical_text()))},
             {"v", v},
             {"h_sign", a.common.h_sign},
             {"pass", all_pass},
             {"chambers", std::move(chambers_json)}};
    emit(a.common, out.dump(2));
    return all_pass ? 0 : 1;
}

int run_rmatrix(const RmatrixArgs& a) {
    Quiver q = quiver_from_file(a.common.quiver_file);
    std::vector<DimVec> ws = parse_slots(a.w, q);
    DimVec v = parse_dimvec(a.v);
    Decomposition base;
    for (const DimVec& wj : ws) base.slots.push_back({dim_zero(q.num_vertices()), wj});
    Chamber from = parse_chamber(a.from, ws.size());
    Chamber to = parse_chamber(a.to, ws.size());

    std::optional<ResultCache> cache = open_cache(a.common);
    RestrictionTable t_from = load_table(a.table, q, v, base, from);
    RestrictionTable t_to = load_table(a.table, q, v, base, to);
    StabMatrix m_from = stab_matrix(q, v, base, from, t_from, cache ? &*cache : nullptr);
    StabMatrix m_to = stab_matrix(q, v, base, to, t_to, cache ? &*cache : nullptr);
    RatMat r = r_matrix(m_from, m_to);
    if (flip_wanted(a.common))
        for (auto& row : r)
            for (auto& e : row) e = e.flip_h();

    json out{{"command", "rmatrix"}, {"from", from.word}, {"to", to.word},
             {"points", m_from.point_ids}, {"entries", ratmat_json(r)}};
    emit(a.common, out.dump(2));
    return 0;
}

int run_ybe(const YbeArgs& a) {
    Quiver q = quiver_from_file(a.common.quiver_file);
    std::vector<DimVec> ws = parse_slots(a.w, q);
    DimVec v = parse_dimvec(a.v);
    Decomposition base;
    for (const DimVec& wj : ws) base.slots.push_back({dim_zero(q.num_vertices()), wj});
    if (!a.table.empty())
        throw input_error("ybe uses the built-in fixed locus; user tables are not supported here");

    std::optional<ResultCache> cache = open_cache(a.common);
    YbeReport report = check_ybe(q, v, base, cache ? &*cache : nullptr);

    for (const auto& c : report.checks)
        std::cerr << (c.pass ? "ok   " : "FAIL ") << c.name
                  << (c.detail.empty() ? "" : ": " + c.detail) << "\n";

    json out{{"command", "ybe"}, {"v", v}, {"pass", report.all_pass()},
             {"report", ybe_report_json(report)}};
    emit(a.common, out.dump(2));
    return report.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact framed-quiver shuffle algebra: CoHA products, stable envelopes, "
                 "R-matrices"};
    app.require_subcommand(1);

    MulArgs mul, mul_tau, mul_ab;
    StabArgs stab;
    PsiArgs psi_args;
    PushArgs push;
    RestrictArgs restr;
    VerifyArgs verify;
    RmatrixArgs rmat;
    YbeArgs ybe;

    auto add_mul = [&](const char* name, const char* desc, MulArgs& a) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        add_common(cmd, a.common);
        cmd->add_option("--left", a.left, "left factor, POLY@(v,w)")->required();
        cmd->add_option("--right", a.right, "right factor, POLY@(v,w)")->required();
        return cmd;
    };
    CLI::App* c_mul = add_mul("mul", "shuffle product m", mul);
    CLI::App* c_mul_tau = add_mul("mul-tau", "twisted product m_tau", mul_tau);
    CLI::App* c_mul_ab = add_mul("mul-ab", "abelianized product m_ab,tau", mul_ab);

    CLI::App* c_stab = app.add_subcommand("stab", "stable envelope of a fixed component");
    add_common(c_stab, stab.common);
    c_stab->add_option("--v", stab.v, "total gauge dimension vector")->required();
    c_stab->add_option("--w", stab.w, "framing decomposition, slots ',' or ';'-separated")->required();
    c_stab->add_option("--chamber", stab.chamber, "chamber word (default identity)");
    c_stab->add_option("--component", stab.component, "gauge dimensions per slot")->required();
    c_stab->add_option("--leaf", stab.leaves, "leaf class per slot, J=POLY (default 1)");

    CLI::App* c_psi = app.add_subcommand("psi", "tautological section: multiply by e(h g_v)");
    add_common(c_psi, psi_args.common);
    c_psi->add_option("--v", psi_args.v, "gauge dimension vector")->required();
    c_psi->add_option("--w", psi_args.w, "framing dimension vector")->required();
    c_psi->add_option("--input", psi_args.input, "polynomial (inline or file)")->required();

    CLI::App* c_push = app.add_subcommand("pushforward", "flag pushforward of a polynomial");
    add_common(c_push, push.common);
    c_push->add_option("--v", push.v, "gauge dimension vector")->required();
    c_push->add_option("--input", push.input, "polynomial (inline or file)")->required();

    CLI::App* c_restr = app.add_subcommand("restrict", "restrict a class at fixed points");
    add_common(c_restr, restr.common);
    c_restr->add_option("--v", restr.v, "gauge dimension vector")->required();
    c_restr->add_option("--w", restr.w, "framing decomposition")->required();
    c_restr->add_option("--chamber", restr.chamber, "chamber word (orders the table)");
    c_restr->add_option("--table", restr.table, "restriction table file (JSON)");
    c_restr->add_option("--input", restr.input, "class to restrict (inline or file)")->required();
    c_restr->add_option("--point", restr.point, "restrict at a single point id");

    CLI::App* c_verify = app.add_subcommand("verify-axioms", "check the stable-envelope axioms");
    add_common(c_verify, verify.common);
    c_verify->add_option("--v", verify.v, "gauge dimension vector")->required();
    c_verify->add_option("--w", verify.w, "framing decomposition")->required();
    c_verify->add_option("--chamber", verify.chamber, "restrict to one chamber (default: all)");
    c_verify->add_option("--table", verify.table, "restriction table file (JSON)");
    c_verify->add_option("--override", verify.overrides,
                         "replace the computed class of a component, COMPONENT=CLASS");

    CLI::App* c_rmat = app.add_subcommand("rmatrix", "wall-crossing matrix between two chambers");
    add_common(c_rmat, rmat.common);
    c_rmat->add_option("--v", rmat.v, "gauge dimension vector")->required();
    c_rmat->add_option("--w", rmat.w, "framing decomposition")->required();
    c_rmat->add_option("--from", rmat.from, "source chamber word")->required();
    c_rmat->add_option("--to", rmat.to, "target chamber word")->required();
    c_rmat->add_option("--table", rmat.table, "restriction table file (JSON)");

    CLI::App* c_ybe = app.add_subcommand("ybe", "braid and unitarity checks on 3 framing slots");
    add_common(c_ybe, ybe.common);
    c_ybe->add_option("--v", ybe.v, "gauge dimension vector")->required();
    c_ybe->add_option("--w", ybe.w, "framing decomposition with 3 slots")->required();
    c_ybe->add_option("--table", ybe.table, "(unsupported)");

    CLI11_PARSE(app, argc, argv);

    try {
        CommonOpts* active = nullptr;
        if (c_mul->parsed()) active = &mul.common;
        else if (c_mul_tau->parsed()) active = &mul_tau.common;
        else if (c_mul_ab->parsed()) active = &mul_ab.common;
        else if (c_stab->parsed()) active = &stab.common;
        else if (c_psi->parsed()) active = &psi_args.common;
        else if (c_push->parsed()) active = &push.common;
        else if (c_restr->parsed()) active = &restr.common;
        else if (c_verify->parsed()) active = &verify.common;
        else if (c_rmat->parsed()) active = &rmat.common;
        else if (c_ybe->parsed()) active = &ybe.common;
        if (active) set_parallel_jobs(active->jobs);

        if (c_mul->parsed()) return run_mul(mul, 0);
        if (c_mul_tau->parsed()) return run_mul(mul_tau, 1);
        if (c_mul_ab->parsed()) return run_mul(mul_ab, 2);
        if (c_stab->parsed()) return run_stab(stab);
        if (c_psi->parsed()) return run_psi(psi_args);
        if (c_push->parsed()) return run_pushforward(push);
        if (c_restr->parsed()) return run_restrict(restr);
        if (c_verify->parsed()) return run_verify(verify);
        if (c_rmat->parsed()) return run_rmatrix(rmat);
        if (c_ybe->parsed()) return run_ybe(ybe);
    } catch (const input_error& e) {
        std::cerr << "cohall: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "cohall: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "cohall: internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
