#include "tautring/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "tautring/cache.hpp"
#include "tautring/numbers.hpp"
#include "tautring/report.hpp"

namespace tautring {

using nlohmann::json;

namespace {

struct ExprLexer {
    const std::string& s;
    std::size_t pos = 0;
    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    long number() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("parse_expression: number expected at " + s.substr(start));
        return std::stol(s.substr(start, pos - start));
    }
};

Rational parse_coefficient(ExprLexer& lx) {
    long num = lx.number();
    if (lx.eat('/')) return Rational(num, lx.number());
    return Rational(num);
}

TautMonomial parse_factors(ExprLexer& lx) {
    TautMonomial m;
    for (;;) {
        char c = lx.peek();
        if (c != 'k' && c != 'p') throw std::invalid_argument("parse_expression: k<i> or p<i> expected");
        ++lx.pos;
        long idx = lx.number();
        long exp = lx.eat('^') ? lx.number() : 1;
        m = m * (c == 'k' ? TautMonomial::kappa(static_cast<int>(idx), static_cast<int>(exp))
                          : TautMonomial::psi(static_cast<int>(idx), static_cast<int>(exp)));
        if (!lx.eat('*')) break;
    }
    return m;
}

}  // namespace

TautExpression parse_expression(const std::string& text) {
    ExprLexer lx{text};
    TautExpression result;
    bool first = true;
    for (;;) {
        int sign = 1;
        if (lx.eat('-'))
            sign = -1;
        else if (lx.eat('+')) {
            if (first) throw std::invalid_argument("parse_expression: unexpected leading +");
        } else if (!first)
            break;
        first = false;
        char c = lx.peek();
        Rational coef(1);
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coef = parse_coefficient(lx);
            have_coef = true;
        }
        TautMonomial mono;
        if (!have_coef || lx.eat('*')) mono = parse_factors(lx);
        result.add_term(mono, coef * Rational(sign));
        lx.skip();
        if (lx.pos >= lx.s.size()) break;
    }
    lx.skip();
    if (lx.pos != lx.s.size())
        throw std::invalid_argument("parse_expression: trailing input \"" + lx.s.substr(lx.pos) + "\"");
    return result;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("parse_range: empty range " + text);
    return {lo, hi};
}

namespace {

CheckResult boolean_check(const std::string& name, const std::string& params, bool ok,
                          const std::string& detail) {
    return CheckResult{name, params, ok, detail};
}

CheckResult span_check(int n) {
    LabelSet labels(n);
    const int N = labels.size();
    int r = span_rank(n, true);
    bool ok = r == N - 3;
    std::string details = "rank " + std::to_string(r) + ", N-3 = " + std::to_string(N - 3);
    if (ok && n % 8 == 2 && n >= 10) {
        int r0 = span_rank(n, false);
        ok = r0 == N - 4;
        details += "; without z: " + std::to_string(r0) + " (want N-4)";
    }
    return boolean_check("span", "n=" + std::to_string(n), ok, details);
}

CheckResult matrix_consistency_check(int n) {
    try {
        auto [M, Mhat] = build_matrices(n);
        int rm = rank(M.entries), rh = rank(Mhat.entries);
        bool ok = rm == rh;
        return boolean_check("matrix", "n=" + std::to_string(n), ok,
                             "tables exactly proportional under the diagonal scalings; rank(M) = " +
                                 std::to_string(rm) + ", rank(Mhat) = " + std::to_string(rh));
    } catch (const std::logic_error& e) {
        return boolean_check("matrix", "n=" + std::to_string(n), false, e.what());
    }
}

CheckResult socle_fixture_check(int n) {
    /* the closed socle evaluations in genus 3 and genus 4 */
    auto vec_eq = [](const std::vector<Rational>& a, const std::vector<Rational>& b) { return a == b; };
    auto constv = [&](int nn, const Rational& v) { return std::vector<Rational>(nn, v); };

    std::vector<Rational> w;
    /* genus 3: kappa_2, kappa_{1,1}, kappa_1 psi_i, psi_i psi_j */
    if (!vec_eq(socle_express(3, n, {}, {2}), constv(n, Rational(1))))
        return boolean_check("socle", "n=" + std::to_string(n), false, "kappa_2 display failed");
    if (!vec_eq(socle_express(3, n, {}, {1, 1}), constv(n, Rational(5 * (n + 5), 3))))
        return boolean_check("socle", "n=" + std::to_string(n), false, "kappa_{1,1} display failed");
    for (int i = 1; i <= n; ++i) {
        w = socle_express(3, n, {{i, 1}}, {1});
        for (int j = 1; j <= n; ++j)
            if (w[j - 1] != (j == i ? Rational(5 * (n + 5), 6) : Rational(5, 6)))
                return boolean_check("socle", "n=" + std::to_string(n), false, "kappa_1 psi display failed");
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            w = socle_express(3, n, {{i, 1}, {j, 1}}, {});
            for (int p = 1; p <= n; ++p)
                if (w[p - 1] != ((p == i || p == j) ? Rational(5, 6) : Rational(0)))
                    return boolean_check("socle", "n=" + std::to_string(n), false, "psi psi display failed");
        }

    /* genus 4: the nine degree-3 displays */
    struct Display {
        std::map<int, int> d;
        std::vector<int> k;
        Rational at_special;   // value at the decorated points
        Rational elsewhere;    // value at the rest
        std::vector<int> special;
    };
    std::vector<Display> displays;
    displays.push_back({{}, {3}, Rational(1), Rational(1), {}});
    displays.push_back({{}, {2, 1}, Rational(7 * (n + 7), 3), Rational(7 * (n + 7), 3), {}});
    displays.push_back({{}, {1, 1, 1}, Rational(35 * (n + 7) * (n + 8), 9), Rational(35 * (n + 7) * (n + 8), 9), {}});
    displays.push_back({{{1, 1}}, {2}, Rational(7 * (n + 8), 9), Rational(14, 9), {1}});
    displays.push_back({{{1, 1}}, {1, 1}, Rational(35 * (n + 7) * (n + 8), 27), Rational(70 * (n + 7), 27), {1}});
    displays.push_back({{{1, 2}}, {1}, Rational(7 * (2 * n + 13), 9), Rational(7, 9), {1}});
    if (n >= 2) {
        displays.push_back({{{1, 1}, {2, 1}}, {1}, Rational(35 * (n + 7), 27), Rational(35, 27), {1, 2}});
        displays.push_back({{{1, 2}, {2, 1}}, {}, Rational(0), Rational(0), {}});  // checked separately below
    }
    for (const auto& disp : displays) {
        if (disp.d.size() == 2 && disp.k.empty()) continue;
        w = socle_express(4, n, disp.d, disp.k);
        for (int p = 1; p <= n; ++p) {
            bool special = false;
            for (int sp : disp.special) special = special || sp == p;
            if (w[p - 1] != (special ? disp.at_special : disp.elsewhere))
                return boolean_check("socle", "n=" + std::to_string(n), false, "genus-4 display failed");
        }
    }
    if (n >= 2) {
        w = socle_express(4, n, {{1, 2}, {2, 1}}, {});
        for (int p = 1; p <= n; ++p) {
            Rational want = p == 1 ? Rational(14, 9) : (p == 2 ? Rational(7, 9) : Rational(0));
            if (w[p - 1] != want)
                return boolean_check("socle", "n=" + std::to_string(n), false, "psi^2 psi display failed");
        }
    }
    if (n >= 3) {
        w = socle_express(4, n, {{1, 1}, {2, 1}, {3, 1}}, {});
        for (int p = 1; p <= n; ++p) {
            Rational want = p <= 3 ? Rational(35, 27) : Rational(0);
            if (w[p - 1] != want)
                return boolean_check("socle", "n=" + std::to_string(n), false, "psi psi psi display failed");
        }
    }
    return boolean_check("socle", "n=" + std::to_string(n), true, "all closed socle evaluations reproduced");
}

CheckResult pixton_vanishing_check(int g, int n, int d) {
    const RingContext ctx(g, n);
    int count = 0;
    for (const auto& fam : enumerate_admissible(ctx, d))
        for (const auto& params : expand_family(fam, ctx, d)) {
            TautExpression rel = pixton_relation(params);
            if (d == g - 1) {
                auto img = socle_express_general(rel, ctx);
                for (const auto& c : img)
                    if (!c.is_zero())
                        return boolean_check("pixton_socle", params.str(), false,
                                             "relation does not vanish in the socle");
            }
            ++count;
        }
    return boolean_check("pixton_socle",
                         "g=" + std::to_string(g) + " n=" + std::to_string(n) + " d=" + std::to_string(d),
                         true, std::to_string(count) + " relations vanish in the socle");
}

CheckResult upper_bound_check(int n) {
    auto ub = upper_bound_solve(n);
    if (!ub.nonsingular)
        return boolean_check("upper_bound", "n=" + std::to_string(n), false, "system is singular");
    return boolean_check("upper_bound", "n=" + std::to_string(n), true,
                         "system nonsingular, det = " + ub.system_det.str());
}

CheckResult genus3_check(int n) {
    auto [r, ok] = genus3_completeness(n);
    RingContext ctx(3, n);
    int dim = static_cast<int>(monomial_basis(ctx, 2).size());
    return boolean_check("genus3", "n=" + std::to_string(n), ok,
                         "relation rank " + std::to_string(r) + " over dimension " + std::to_string(dim) +
                             ", r_3^2 = " + std::to_string(dim - r));
}

CheckResult bsz_check(int n) {
    auto r = bsz_in_pixton(n);
    return boolean_check("bsz", "n=" + std::to_string(n), r.displays_ok && r.all_representable, r.details);
}

CheckResult ranks_check(int g, int n) {
    auto r = rank_table(g, n);
    std::ostringstream os;
    for (std::size_t d = 0; d < r.size(); ++d) os << (d ? "," : "") << r[d];
    return boolean_check("ranks", "g=" + std::to_string(g) + " n=" + std::to_string(n), true, os.str());
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"det",     "stable_plane", "eigenvector", "exceptional", "span",   "decompose",
            "complement", "upper_bound", "genus3",      "bsz",         "matrix", "socle",
            "pixton",     "ranks",       "all"};
}

std::vector<CheckResult> run_suite(const std::string& suite, int n_lo, int n_hi) {
    std::vector<CheckResult> out;
    auto want = [&](const std::string& name) { return suite == name || suite == "all"; };
    for (int n = n_lo; n <= n_hi; ++n) {
        if (want("det")) out.push_back(verify_det(n));
        if (want("stable_plane") && n >= 2)
            for (int i = 1; i <= n - 1; ++i) out.push_back(stable_plane_check(n, i));
        if (want("eigenvector") && n >= 4)
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int k = j + 1; k <= n; ++k)
                        for (int l = k + 1; l <= n; ++l) out.push_back(eigenvector_check(n, i, j, k, l));
        if (want("exceptional") && n >= 10 && n % 8 == 2) {
            auto r = exceptional_analysis(n);
            out.push_back(boolean_check("exceptional", "n=" + std::to_string(n), r.ok, r.details));
        }
        if (want("span") && n >= 2) out.push_back(span_check(n));
        if (want("decompose") && n >= 2) out.push_back(decompose_random_check(n, 100));
        if (want("complement") && n >= 2) out.push_back(complement_block_check(n));
        if (want("upper_bound")) out.push_back(upper_bound_check(n));
        if (want("genus3")) out.push_back(genus3_check(n));
        if (want("bsz") && n >= 2) out.push_back(bsz_check(n));
        if (want("matrix")) out.push_back(matrix_consistency_check(n));
        if (want("socle")) out.push_back(socle_fixture_check(n));
        if (want("pixton")) {
            out.push_back(pixton_vanishing_check(3, n, 2));
            if (n <= 5) out.push_back(pixton_vanishing_check(4, n, 3));
        }
        if (want("ranks"))
            for (int g = 1; g <= 4; ++g) out.push_back(ranks_check(g, n));
    }
    return out;
}

namespace {

void write_output(const std::string& payload, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << payload;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        f << payload;
    }
    std::filesystem::rename(tmp, path);
}

std::string relations_payload(int g, int n, int d, const std::string& format) {
    const RingContext ctx(g, n);
    json arr = json::array();
    std::ostringstream text;
    if (format == "csv") text << "g,n,d,sigma,a,relation\n";
    for (const auto& fam : enumerate_admissible(ctx, d))
        for (const auto& params : expand_family(fam, ctx, d)) {
            TautExpression rel = pixton_relation(params);
            if (format == "json") {
                json rec;
                rec["g"] = g;
                rec["n"] = n;
                rec["d"] = d;
                rec["sigma"] = params.sigma;
                json a = json::object();
                for (const auto& [pt, val] : params.a) a[std::to_string(pt)] = val;
                rec["a"] = a;
                rec["relation"] = rel.str();
                arr.push_back(rec);
            } else if (format == "csv") {
                std::ostringstream sig, dec;
                for (std::size_t i = 0; i < params.sigma.size(); ++i)
                    sig << (i ? " " : "") << params.sigma[i];
                bool first = true;
                for (const auto& [pt, val] : params.a) {
                    dec << (first ? "" : " ") << pt << ":" << val;
                    first = false;
                }
                text << g << "," << n << "," << d << ",\"" << sig.str() << "\",\"" << dec.str()
                     << "\",\"" << rel.str() << "\"\n";
            } else {
                text << params.str() << " : " << rel.str() << "\n";
            }
        }
    return format == "json" ? arr.dump(2) + "\n" : text.str();
}

std::string default_cache_dir() {
    if (const char* env = std::getenv("TAUTRING_CACHE_DIR")) return env;
    return ".tautring-cache";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact tautological-ring computations for genus <= 4"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text", output_path, cache_dir = default_cache_dir();
    app.add_option("--format", format, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--output", output_path, "write the report to this path");
    app.add_option("--cache-dir", cache_dir, "result cache directory");

    int g = 3, n = 1, d = 2;
    std::string which = "Mhat", klass, range = "1..4", suite = "all";

    auto* relations = app.add_subcommand("relations", "generate the relations of one degree");
    relations->add_option("--genus", g)->required();
    relations->add_option("--n", n)->required();
    relations->add_option("--degree", d)->required();

    auto* socle = app.add_subcommand("socle", "socle coordinates of a class");
    socle->add_option("--genus", g)->required();
    socle->add_option("--n", n)->required();
    socle->add_option("--class", klass, "expression, e.g. \"k2*p1\" or \"k1^2\"")->required();

    auto* matrix = app.add_subcommand("matrix", "export a pairing matrix");
    matrix->add_option("--n", n)->required();
    matrix->add_option("--which", which)->check(CLI::IsMember({"M", "Mhat"}));

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite)->check(CLI::IsMember(suite_names()));
    verify->add_option("--n", range, "n range, e.g. 1..12");

    auto* ranks = app.add_subcommand("ranks", "rank table r_g^d(n)");
    ranks->add_option("--genus", g)->required();
    ranks->add_option("--n", range, "n range, e.g. 1..6");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (relations->parsed()) {
            write_output(relations_payload(g, n, d, format), output_path, out);
            return 0;
        }
        if (socle->parsed()) {
            const RingContext ctx(g, n);
            TautExpression e = parse_expression(klass);
            auto v = socle_express_general(e, ctx);
            if (format == "json") {
                json rec;
                rec["g"] = g;
                rec["n"] = n;
                rec["class"] = e.str();
                json coords = json::array();
                for (const auto& c : v) coords.push_back(c.str());
                rec["socle"] = coords;
                write_output(rec.dump(2) + "\n", output_path, out);
            } else {
                std::ostringstream os;
                for (int i = 0; i < static_cast<int>(v.size()); ++i)
                    os << (i ? (format == "csv" ? "," : " ") : "") << v[i].str();
                os << "\n";
                write_output(os.str(), output_path, out);
            }
            return 0;
        }
        if (matrix->parsed()) {
            ResultCache cache(cache_dir);
            const std::string key = "matrix:n=" + std::to_string(n) + ":which=" + which + ":fmt=" + format;
            bool corrupt = false;
            std::string payload;
            if (auto hit = cache.load(key, &corrupt)) {
                payload = *hit;
            } else {
                if (corrupt) err << "warning: discarding corrupt cache entry for " << key << "\n";
                auto [M, Mhat] = build_matrices(n);
                const PairingMatrix& sel = which == "M" ? M : Mhat;
                payload = format == "csv" ? matrix_csv(sel) : matrix_json(sel);
                cache.store(key, payload);
            }
            write_output(payload, output_path, out);
            return 0;
        }
        if (verify->parsed()) {
            auto [lo, hi] = parse_range(range);
            auto checks = run_suite(suite, lo, hi);
            std::string payload = format == "json"   ? report_json(checks)
                                  : format == "csv" ? report_csv(checks)
                                                    : report_text(checks);
            write_output(payload, output_path, out);
            for (const auto& c : checks)
                if (!c.ok) return 1;
            return 0;
        }
        if (ranks->parsed()) {
            auto [lo, hi] = parse_range(range);
            std::string payload;
            if (format == "csv")
                payload = ranks_csv(g, lo, hi);
            else if (format == "json")
                payload = ranks_json(g, lo, hi);
            else {
                std::ostringstream os;
                for (int nn = lo; nn <= hi; ++nn) {
                    auto r = rank_table(g, nn);
                    os << "g=" << g << " n=" << nn << " ranks:";
                    for (int v : r) os << " " << v;
                    os << "\n";
                }
                payload = os.str();
            }
            write_output(payload, output_path, out);
            return 0;
        }
    } catch (const std::domain_error& e) {
        err << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "verification failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace tautring
