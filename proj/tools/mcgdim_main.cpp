#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mcgdim/criterion.hpp"
#include "mcgdim/enumerate.hpp"
#include "mcgdim/errors.hpp"
#include "mcgdim/groups.hpp"
#include "mcgdim/orbifolds.hpp"
#include "mcgdim/sigio.hpp"
#include "mcgdim/surfaces.hpp"
#include "mcgdim/verify.hpp"

using nlohmann::json;
using namespace mcgdim;

namespace {

// Shared output switches; --json wins over --quiet.
struct Output {
    bool as_json = false;
    bool quiet = false;

    void emit(const json& j, const std::string& text) const {
        if (as_json)
            std::cout << j.dump() << "\n";
        else if (!quiet)
            std::cout << text;
    }
};

std::string bool_str(bool b) { return b ? "true" : "false"; }

SurfaceKind parse_kind(const std::string& s) {
    if (s == "N") return SurfaceKind::NonOrientable;
    if (s == "S") return SurfaceKind::Orientable;
    throw domain_error("kind must be N or S");
}

std::string kind_str(SurfaceKind k) {
    return k == SurfaceKind::NonOrientable ? "N" : "S";
}

std::optional<std::int64_t> env_max_order() {
    const char* v = std::getenv("MCGDIM_MAX_ORDER");
    if (v == nullptr || *v == '\0') return std::nullopt;
    std::string s(v);
    std::int64_t value = 0;
    std::size_t used = 0;
    try {
        value = std::stoll(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || value < 2)
        throw domain_error("MCGDIM_MAX_ORDER must be an integer >= 2");
    return value;
}

// "cyclic(6) x dihedral(4)": direct product of named constructors.
FiniteGroup parse_group_product(const std::string& spec) {
    std::vector<std::string> terms;
    std::string cur;
    for (char ch : spec) {
        if (ch == 'x') {
            terms.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    terms.push_back(cur);

    auto factor = [](const std::string& term) -> FiniteGroup {
        if (term == "trivial" || term == "trivial()") return FiniteGroup::trivial();
        auto open = term.find('(');
        if (open == std::string::npos || term.back() != ')')
            throw domain_error("group factor must look like name(n): \"" + term + "\"");
        std::string name = term.substr(0, open);
        std::string arg = term.substr(open + 1, term.size() - open - 2);
        int n = 0;
        std::size_t used = 0;
        try {
            n = std::stoi(arg, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != arg.size()) throw domain_error("bad group constructor argument: \"" + arg + "\"");
        if (name == "cyclic") return FiniteGroup::cyclic(n);
        if (name == "dihedral") return FiniteGroup::dihedral(n);
        if (name == "symmetric") return FiniteGroup::symmetric(n);
        throw domain_error("unknown group constructor: \"" + name + "\"");
    };

    std::optional<FiniteGroup> acc;
    for (const auto& term : terms) {
        if (term.empty()) throw domain_error("empty factor in group product spec");
        FiniteGroup g = factor(term);
        acc = acc ? FiniteGroup::direct_product(*acc, g) : std::move(g);
    }
    return *acc;
}

void run_vcd(const Output& out, SurfaceKind kind, int genus, int punctures,
             int boundaries) {
    Surface s{kind, genus, punctures, boundaries};
    const int v = vcd_mcg(s);
    const DimensionBounds db = known_dimension_bounds(s);
    json j{{"kind", kind_str(kind)},       {"genus", genus},
           {"punctures", punctures},       {"boundaries", boundaries},
           {"vcd", v},                     {"dimension_lower", db.lower},
           {"dimension_upper", db.upper},  {"dimension_equal", db.equal}};
    std::string text = "vcd = " + std::to_string(v) + "\nknown dimension bounds = [" +
                       std::to_string(db.lower) + ", " + std::to_string(db.upper) +
                       "]" + (db.equal ? " (exact)" : "") + "\n";
    out.emit(j, text);
}

void run_chi(const Output& out, SurfaceKind kind, int genus, int punctures,
             int boundaries) {
    Surface s{kind, genus, punctures, boundaries};
    validate(s);
    const int chi = euler_characteristic(s);
    json j{{"kind", kind_str(kind)},
           {"genus", genus},
           {"punctures", punctures},
           {"boundaries", boundaries},
           {"chi", chi},
           {"hyperbolic", is_hyperbolic(s)}};
    std::string text = "chi = " + std::to_string(chi) + "\nhyperbolic = " +
                       bool_str(is_hyperbolic(s)) + "\n";
    out.emit(j, text);
}

void run_sig_parse(const Output& out, const std::string& text_in) {
    OrbifoldSignature sig = parse_signature(text_in);
    auto [e_sum, c_sum] = ef_cf(sig);
    json j{{"canonical", render_signature(sig)},
           {"orientable", sig.orientable},
           {"genus", sig.genus},
           {"elliptic_count", elliptic_count(sig)},
           {"corner_count", corner_count(sig)},
           {"mirror_boundaries", mirror_boundary_count(sig)},
           {"cornered_boundaries", cornered_boundary_count(sig)},
           {"elliptic_sum", e_sum.str()},
           {"corner_sum", c_sum.str()},
           {"chi_orb", orbifold_euler(sig).str()}};
    std::string text = "canonical = " + render_signature(sig) + "\nelliptic points = " +
                       std::to_string(elliptic_count(sig)) + " (sum " + e_sum.str() +
                       ")\ncorners = " + std::to_string(corner_count(sig)) + " (sum " +
                       c_sum.str() + ")\nmirror boundaries = " +
                       std::to_string(mirror_boundary_count(sig)) +
                       "\ncornered boundaries = " +
                       std::to_string(cornered_boundary_count(sig)) +
                       "\nchi_orb = " + orbifold_euler(sig).str() + "\n";
    out.emit(j, text);
}

void run_weyl(const Output& out, const std::string& text_in) {
    OrbifoldSignature sig = parse_signature(text_in);
    Surface u = underlying_surface(sig);
    const int v = vcd_weyl(sig);
    json j{{"signature", render_signature(sig)},
           {"underlying_kind", kind_str(u.kind)},
           {"underlying_genus", u.genus},
           {"punctures", u.punctures},
           {"boundaries", u.boundaries},
           {"vcd_weyl", v}};
    std::string text = "underlying surface = " + kind_str(u.kind) + "(genus=" +
                       std::to_string(u.genus) + ", punctures=" +
                       std::to_string(u.punctures) + ", boundaries=" +
                       std::to_string(u.boundaries) + ")\nvcd_weyl = " +
                       std::to_string(v) + "\n";
    out.emit(j, text);
}

void run_lambda(const Output& out, const FiniteGroup& g) {
    const int lam = lambda_exact(g);
    const LambdaBounds lb = lambda_bounds(g.order());
    const bool ok = Rational(lam) <= lb.half && lam <= lb.log2;
    json j{{"group", g.name()},        {"order", g.order()},
           {"lambda", lam},            {"bound_half", lb.half.str()},
           {"bound_log2", lb.log2},    {"bound_omega", lb.omega},
           {"within_bounds", ok}};
    std::string text = "group = " + g.name() + "\norder = " + std::to_string(g.order()) +
                       "\nlambda = " + std::to_string(lam) + "\nbounds: order/2 = " +
                       lb.half.str() + ", floor log2 = " + std::to_string(lb.log2) +
                       ", omega = " + std::to_string(lb.omega) +
                       "\nwithin bounds = " + bool_str(ok) + "\n";
    out.emit(j, text);
}

void run_enumerate(const Output& out, int genus, std::optional<std::int64_t> order,
                   std::optional<std::int64_t> max_order) {
    std::vector<std::pair<std::int64_t, OrbifoldSignature>> rows;
    std::int64_t ceiling = 0;
    if (order) {
        for (auto& s : enumerate_signatures(genus, *order)) rows.emplace_back(*order, s);
    } else {
        ceiling = max_order.value_or(default_order_ceiling(genus));
        rows = enumerate_all(genus, ceiling);
    }
    json sigs = json::array();
    std::string text;
    for (const auto& [o, s] : rows) {
        sigs.push_back(json{{"order", o}, {"signature", render_signature(s)}});
        text += std::to_string(o) + "\t" + render_signature(s) + "\n";
    }
    json j{{"genus", genus}, {"count", rows.size()}, {"signatures", std::move(sigs)}};
    if (order)
        j["order"] = *order;
    else
        j["max_order"] = ceiling;
    out.emit(j, text);
}

void run_criterion(const Output& out, int genus, const std::string& actions_path,
                   std::optional<std::int64_t> max_order) {
    std::vector<ActionRow> rows;
    const bool database = !actions_path.empty();
    if (database) rows = load_actions(actions_path);
    CriterionReport rep = check_criterion(
        genus, database ? CriterionMode::Database : CriterionMode::PureRH,
        database ? &rows : nullptr, max_order);

    json witnesses = json::array();
    for (const Witness& w : rep.witnesses)
        witnesses.push_back(json{{"order", w.order},
                                 {"signature", render_signature(w.signature)},
                                 {"vcd_weyl", w.vcd_weyl},
                                 {"lambda_bound", w.lambda_bound}});
    json j{{"g", rep.genus},
           {"mode", database ? "Database" : "PureRH"},
           {"m_star", rep.m_star},
           {"vcd_target", rep.vcd_target},
           {"cd_upper", rep.cd_upper},
           {"gd_upper", rep.gd_upper},
           {"equal", rep.equal},
           {"ceiling_hit", rep.ceiling_hit},
           {"witnesses", std::move(witnesses)}};

    std::string text = "mode = " + std::string(database ? "Database" : "PureRH") +
                       "\nm_star = " + std::to_string(rep.m_star) +
                       "\nvcd_target = " + std::to_string(rep.vcd_target) +
                       "\nequal = " + bool_str(rep.equal) +
                       "\ncd_upper = " + std::to_string(rep.cd_upper) +
                       "\ngd_upper = " + std::to_string(rep.gd_upper) +
                       "\nceiling_hit = " + bool_str(rep.ceiling_hit) + "\n";
    for (const Witness& w : rep.witnesses)
        text += "witness: order=" + std::to_string(w.order) + " signature=" +
                render_signature(w.signature) + " vcd_weyl=" +
                std::to_string(w.vcd_weyl) + " lambda_bound=" +
                std::to_string(w.lambda_bound) +
                (w.rh_only ? " (order arithmetic only)" : "") + "\n";
    if (genus >= 3) {
        Conclusion c = conclude(genus, &rep);
        text += "conclusion: vcd = " + std::to_string(c.vcd) + ", cd in [" +
                std::to_string(c.cd_bounds[0]) + ", " + std::to_string(c.cd_bounds[1]) +
                "], gd in [" + std::to_string(c.gd_bounds[0]) + ", " +
                std::to_string(c.gd_bounds[1]) + "]" +
                (c.equal ? " (all equal)" : "") + "\n";
    }
    out.emit(j, text);
}

// Exit 0 when every verifier reproduces the expected answer, 1 otherwise.
int run_verify_lemmas(const Output& out) {
    json checks = json::array();
    std::string text;
    bool all = true;
    auto record = [&](const std::string& name, bool pass, const std::string& detail) {
        checks.push_back(json{{"name", name}, {"pass", pass}, {"detail", detail}});
        text += std::string(pass ? "PASS " : "FAIL ") + name +
                (detail.empty() ? "" : " (" + detail + ")") + "\n";
        all = all && pass;
    };

    using PairSet = std::set<std::pair<int, int>>;
    auto column_one = [](int b_max) {
        PairSet s;
        for (int b = 2; b <= b_max; ++b) s.emplace(1, b);
        return s;
    };
    struct LemmaCase {
        Rational eps;
        std::string name;
        PairSet expected;
        std::optional<std::int64_t> threshold;
    };
    const std::vector<LemmaCase> cases{
        {Rational(0), "eps=0", PairSet{{1, 2}, {1, 3}}, 4},
        {Rational(1, 2), "eps=1/2",
         [&] { auto s = column_one(50); s.emplace(2, 2); return s; }(), std::nullopt},
        {Rational(1), "eps=1",
         [&] {
             auto s = column_one(50);
             for (int b = 2; b <= 5; ++b) s.emplace(2, b);
             s.emplace(3, 2);
             return s;
         }(),
         std::nullopt}};
    for (const auto& c : cases) {
        const bool sets = verify_lemma_ab(c.eps, 50, 50) == c.expected;
        const bool thr = lemma_ab_column_one_threshold(c.eps) == c.threshold;
        record("pair-inequality exceptions " + c.name, sets && thr,
               sets ? (thr ? "" : "column threshold mismatch") : "exception set mismatch");
    }

    auto d1 = min_positive_deficiency(100, false);
    record("minimum positive deficiency", d1.minimum == Rational(1, 42) &&
               d1.witnesses == std::vector<std::array<std::int64_t, 3>>{{2, 3, 7}},
           "min " + d1.minimum.str());
    auto d2 = min_positive_deficiency(100, true);
    record("minimum positive deficiency, two equal",
           d2.minimum == Rational(1, 12) &&
               d2.witnesses == std::vector<std::array<std::int64_t, 3>>{{3, 3, 4}},
           "min " + d2.minimum.str());

    auto bad = verify_lambda_bounds(200);
    record("subgroup chain bound audit", bad.empty(),
           std::to_string(bad.size()) + " violations");

    json j{{"checks", std::move(checks)}, {"all_pass", all}};
    out.emit(j, text);
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact mapping class group dimension calculator"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    app.add_flag("--json", out.as_json, "JSON output on stdout");
    app.add_flag("--quiet", out.quiet, "Suppress human-readable output");

    std::string kind_flag = "N";
    int genus = 0, punctures = 0, boundaries = 0;
    std::string sig_text;
    std::int64_t opt_cyclic = 0, opt_dihedral = 0;
    std::vector<std::string> opt_perm;
    int opt_degree = 0;
    std::string opt_product;
    std::optional<std::int64_t> opt_order, opt_max_order;
    std::string actions_path;

    auto add_surface_opts = [&](CLI::App* cmd) {
        cmd->add_option("--kind", kind_flag, "Surface kind: N or S")
            ->check(CLI::IsMember({"N", "S"}))
            ->required();
        cmd->add_option("--genus", genus, "Genus (crosscaps for N, handles for S)")
            ->required();
        cmd->add_option("--punctures", punctures, "Puncture count");
        cmd->add_option("--boundary", boundaries, "Boundary component count");
    };

    CLI::App* vcd_cmd = app.add_subcommand("vcd", "Mapping class group vcd");
    add_surface_opts(vcd_cmd);
    CLI::App* chi_cmd = app.add_subcommand("chi", "Euler characteristic");
    add_surface_opts(chi_cmd);

    CLI::App* sig_cmd = app.add_subcommand("sig", "Signature utilities");
    sig_cmd->require_subcommand(1);
    CLI::App* sig_parse_cmd = sig_cmd->add_subcommand("parse", "Parse and canonicalize");
    sig_parse_cmd->add_option("signature", sig_text, "Orbifold signature")->required();

    CLI::App* weyl_cmd = app.add_subcommand("weyl", "Normalizer-quotient vcd");
    weyl_cmd->add_option("signature", sig_text, "Orbifold signature")->required();

    CLI::App* lambda_cmd = app.add_subcommand("lambda", "Longest subgroup chain");
    lambda_cmd->add_option("--cyclic", opt_cyclic, "Cyclic group of order n");
    lambda_cmd->add_option("--dihedral", opt_dihedral, "Dihedral group of order 2n");
    lambda_cmd->add_option("--perm", opt_perm, "Generator in cycle notation (repeatable)");
    lambda_cmd->add_option("--degree", opt_degree, "Points for --perm generators");
    lambda_cmd->add_option("--product", opt_product,
                           "Product spec, e.g. \"cyclic(3) x dihedral(4)\"");

    CLI::App* enum_cmd = app.add_subcommand("enumerate", "Compatible quotient signatures");
    enum_cmd->add_option("--genus", genus, "Closed non-orientable genus")->required();
    enum_cmd->add_option("--order", opt_order, "Single action order");
    enum_cmd->add_option("--max-order", opt_max_order, "Scan orders 2..B");

    CLI::App* crit_cmd = app.add_subcommand("criterion", "Dimension-equality criterion");
    crit_cmd->add_option("--genus", genus, "Closed non-orientable genus")->required();
    crit_cmd->add_option("--actions", actions_path, "Action rows (TSV) for Database mode");
    crit_cmd->add_option("--max-order", opt_max_order, "Order ceiling for PureRH mode");

    CLI::App* verify_cmd = app.add_subcommand("verify", "Verifier suite");
    verify_cmd->require_subcommand(1);
    CLI::App* lemmas_cmd = verify_cmd->add_subcommand("lemmas", "Run all verifiers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        json diag{{"code", "usage"}, {"message", e.what()}};
        std::cerr << diag.dump() << "\n";
        return 2;
    }

    try {
        if (*vcd_cmd)
            run_vcd(out, parse_kind(kind_flag), genus, punctures, boundaries);
        else if (*chi_cmd)
            run_chi(out, parse_kind(kind_flag), genus, punctures, boundaries);
        else if (*sig_parse_cmd)
            run_sig_parse(out, sig_text);
        else if (*weyl_cmd)
            run_weyl(out, sig_text);
        else if (*lambda_cmd) {
            const int picked = (opt_cyclic > 0) + (opt_dihedral > 0) + !opt_perm.empty() +
                               !opt_product.empty();
            if (picked != 1) {
                json diag{{"code", "usage"},
                          {"message",
                           "choose exactly one of --cyclic, --dihedral, --perm, --product"}};
                std::cerr << diag.dump() << "\n";
                return 2;
            }
            FiniteGroup g = opt_cyclic > 0 ? FiniteGroup::cyclic(static_cast<int>(opt_cyclic))
                            : opt_dihedral > 0
                                ? FiniteGroup::dihedral(static_cast<int>(opt_dihedral))
                            : !opt_perm.empty()
                                ? FiniteGroup::from_permutations(opt_perm, opt_degree)
                                : parse_group_product(opt_product);
            run_lambda(out, g);
        } else if (*enum_cmd) {
            if (opt_order && opt_max_order) {
                json diag{{"code", "usage"},
                          {"message", "--order and --max-order are mutually exclusive"}};
                std::cerr << diag.dump() << "\n";
                return 2;
            }
            run_enumerate(out, genus, opt_order,
                          opt_max_order ? opt_max_order : env_max_order());
        } else if (*crit_cmd) {
            run_criterion(out, genus, actions_path,
                          opt_max_order ? opt_max_order : env_max_order());
        } else if (*lemmas_cmd) {
            return run_verify_lemmas(out);
        }
    } catch (const parse_error& e) {
        json loc{{"offset", e.offset()}};
        if (!e.field().empty()) loc["field"] = e.field();
        json diag{{"code", "parse_error"}, {"message", e.what()}, {"location", loc}};
        std::cerr << diag.dump() << "\n";
        return 1;
    } catch (const ingest_error& e) {
        json diag{{"code", "ingest_error"},
                  {"message", e.what()},
                  {"location", json{{"line", e.line()}}}};
        std::cerr << diag.dump() << "\n";
        return 1;
    } catch (const arithmetic_overflow& e) {
        json diag{{"code", "arithmetic_overflow"}, {"message", e.what()}};
        std::cerr << diag.dump() << "\n";
        return 1;
    } catch (const domain_error& e) {
        json diag{{"code", "domain_error"}, {"message", e.what()}};
        std::cerr << diag.dump() << "\n";
        return 1;
    }
    return 0;
}
