#include "qhcf/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>

#include "qhcf/border_strip.hpp"
#include "qhcf/continued_fraction.hpp"
#include "qhcf/errors.hpp"
#include "qhcf/higher_cf.hpp"
#include "qhcf/json_io.hpp"
#include "qhcf/positivity.hpp"
#include "qhcf/qnum.hpp"
#include "qhcf/stabilization.hpp"
#include "qhcf/transfer_matrix.hpp"

namespace qhcf::cli {

namespace {

using nlohmann::json;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<BigInt, BigInt> parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return {BigInt(text), BigInt(1)};
        return {BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1))};
    } catch (const std::exception&) {
        throw Usage("expected a rational like 17/3, got '" + text + "'");
    }
}

std::vector<int> parse_terms(const std::string& text) {
    std::vector<int> terms;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            terms.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw Usage("expected a comma-separated term list, got '" + text + "'");
        }
    }
    if (terms.empty()) throw Usage("empty term list");
    return terms;
}

// "1,3,15:periodic=1,3,3" -> prefix + repeating tail; a plain list is a
// finite continued fraction.
struct CFDescriptor {
    std::vector<int> prefix;
    std::vector<int> periodic;  // empty for a finite fraction
};

CFDescriptor parse_descriptor(const std::string& text) {
    CFDescriptor d;
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    if (colon != std::string::npos) {
        std::string tail = text.substr(colon + 1);
        const std::string key = "periodic=";
        if (tail.rfind(key, 0) != 0) throw Usage("tail must look like ':periodic=1,3,3'");
        d.periodic = parse_terms(tail.substr(key.size()));
        if (!head.empty()) d.prefix = parse_terms(head);  // pure periodic: ":periodic=1"
    } else {
        d.prefix = parse_terms(head);
    }
    return d;
}

int max_order_cap() {
    if (const char* env = std::getenv("QHCF_MAX_ORDER")) {
        try {
            return std::max(0, std::stoi(env));
        } catch (const std::exception&) {
            throw Usage("QHCF_MAX_ORDER is not an integer");
        }
    }
    return 256;
}

std::string text_rational(const BigRational& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string matrix_text(const PolyMatrix& m) {
    std::ostringstream os;
    for (int i = 1; i <= m.dim(); ++i) {
        os << "[ ";
        for (int j = 1; j <= m.dim(); ++j) {
            if (j > 1) os << " | ";
            os << m.entry(i, j).to_string();
        }
        os << " ]\n";
    }
    return os.str();
}

struct VerifyItem {
    std::string name;
    std::function<bool()> check;
};

LaurentPoly poly(std::vector<BigInt> coeffs) { return LaurentPoly::from_coeffs(0, std::move(coeffs)); }

std::vector<VerifyItem> golden_examples() {
    std::vector<VerifyItem> items;
    items.push_back({"cf-expansion-17-3", [] {
        return ContinuedFraction::from_rational(17, 3).terms() == std::vector<int>{5, 1, 2};
    }});
    items.push_back({"matrix-product-q1", [] {
        std::vector<std::vector<BigInt>> want{{14, 8, 3}, {8, 5, 2}, {3, 2, 1}};
        return product_x(ContinuedFraction({2, 2}), 2).eval_one() == want;
    }});
    items.push_back({"ppartition-count-14", [] {
        return enumerate_ppartitions(BorderStrip(ContinuedFraction({2, 2})), 2).size() == 14;
    }});
    items.push_back({"omega-gf-11", [] {
        return omega_gf(BorderStrip(ContinuedFraction({2, 2})), 2, 1, 1) ==
               poly({1, 2, 3, 3, 3, 1, 1});
    }});
    items.push_back({"omega-gf-21", [] {
        return omega_gf(BorderStrip(ContinuedFraction({2, 2})), 2, 2, 1) == poly({1, 2, 2, 2, 1});
    }});
    items.push_back({"omega-count-12", [] {
        return omega_gf(BorderStrip(ContinuedFraction({2, 2})), 2, 1, 2).eval_one() == 8;
    }});
    items.push_back({"transfer-matrices-m2", [] {
        PolyMatrix r = mat_r(2), l = mat_l(2), w = mat_w(2);
        bool ok = r.entry(1, 1) == LaurentPoly::monomial(1, 2) && r.entry(1, 3) == LaurentPoly(1) &&
                  r.entry(2, 1).is_zero() && l.entry(2, 1) == LaurentPoly::monomial(1, 2) &&
                  l.entry(1, 2).is_zero();
        return ok && w * w == PolyMatrix::identity(3);
    }});
    items.push_back({"hcf-q1-vector-17-3", [] {
        auto v = hcf_q1_vector(ContinuedFraction({5, 1, 2}), 2);
        return v == std::vector<BigRational>{BigRational(59, 3), BigRational(35, 6), BigRational(1)};
    }});
    items.push_back({"hcf-q-5-2", [] {
        RatFunc got = hcf_q_matrix(ContinuedFraction({2, 2}), 2, 2);
        return got.num() == poly({1, 2, 3, 3, 3, 1, 1}) && got.den() == poly({1, 1, 1}) &&
               hcf_q_recursive(ContinuedFraction({2, 2}), 2, 2) == got;
    }});
    items.push_back({"hcf-q-7-3", [] {
        RatFunc got = hcf_q_matrix(ContinuedFraction({2, 3}), 2, 2);
        return got.num() == poly({1, 2, 4, 4, 5, 4, 3, 1, 1}) &&
               got.den() == poly({1, 1, 2, 1, 1}) &&
               hcf_q_recursive(ContinuedFraction({2, 3}), 2, 2) == got;
    }});
    items.push_back({"mgo-5-2", [] {
        return mgo_qrational(ContinuedFraction({2, 2})) ==
               hcf_q_matrix(ContinuedFraction({2, 2}), 1, 1);
    }});
    items.push_back({"stabilize-golden-ratio", [] {
        IrrationalCF phi({}, std::vector<int>{1});
        SeriesPrefix s2 = stable_series(phi, 2, 2, 16);
        SeriesPrefix s1 = stable_series(phi, 1, 2, 16);
        std::vector<BigInt> w2{1, 0, 1, 0, 1, -1, 0, 1, -3, 6, -10, 17, -24, 25, -15, -21, 107};
        std::vector<BigInt> w1{1, 0, 1, 0, 0, 0, -1, 2, -4, 7, -9, 11, -11, 2, 22, -74, 171};
        return s2.coeffs == w2 && s1.coeffs == w1;
    }});
    items.push_back({"stabilize-sec7", [] {
        IrrationalCF x({1, 3, 15}, std::vector<int>{1, 3, 3});
        std::vector<BigInt> want{1, 0, 0,  0, 1, 0, -1, -1, 1, 2,
                                 0, -3, -2, 3, 5, -1, -8, -4, 9, 11};
        return stable_series(x, 1, 1, 19).coeffs == want;
    }});
    items.push_back({"positivity-5-2-vs-7-3", [] {
        PositivityProblem prob(5, 2, 7, 3, 2, 2);
        LaurentPoly diff = prob.difference();
        if (diff != LaurentPoly::from_coeffs(3, {1, 2, 2, 2, 1, 1})) return false;
        auto pairs = prob.complement_pairs();
        if (pairs.size() != 9) return false;
        LaurentPoly gf;
        for (const auto& p : pairs)
            gf += LaurentPoly::monomial(1, static_cast<int>(weight(p.left.labels) +
                                                            weight(p.right.labels)));
        return gf == diff;
    }});
    return items;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations with q-deformed higher continued fractions"};
    app.require_subcommand(1);
    std::string format = "json";

    std::string rational, terms_text, a_text, b_text, descriptor, suite = "paper-examples";
    int m = 1, i = 0, j = 1, order = 0;
    bool q1 = false, with_pairs = false;
    std::string variant = "plain", route = "matrix";

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format, json (default) or text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* cf_cmd = app.add_subcommand("cf", "continued fraction expansion of a rational");
    cf_cmd->add_option("--rational", rational, "value r/s with r/s >= 1")->required();

    CLI::App* strip_cmd = app.add_subcommand("strip", "border strip of a term sequence");
    strip_cmd->add_option("--cf", terms_text, "comma-separated terms")->required();

    CLI::App* omega_cmd =
        app.add_subcommand("omega", "restricted P-partition generating function");
    omega_cmd->add_option("--cf", terms_text)->required();
    omega_cmd->add_option("--m", m, "part bound")->required();
    omega_cmd->add_option("--i", i, "first-part restriction index")->required();
    omega_cmd->add_option("--j", j, "last-part restriction index")->required();
    omega_cmd->add_option("--variant", variant)->check(CLI::IsMember({"plain", "bar"}));

    CLI::App* matrix_cmd = app.add_subcommand("matrix", "transfer-matrix product");
    matrix_cmd->add_option("--cf", terms_text)->required();
    matrix_cmd->add_option("--m", m)->required();
    matrix_cmd->add_flag("--q1", q1, "evaluate at q=1");

    CLI::App* hcf_cmd = app.add_subcommand("hcf", "higher continued fraction values");
    hcf_cmd->add_option("--rational", rational)->required();
    hcf_cmd->add_option("--m", m)->required();
    hcf_cmd->add_option("--i", i);
    hcf_cmd->add_flag("--q1", q1, "rational values instead of q-polynomials");
    hcf_cmd->add_option("--route", route)->check(CLI::IsMember({"matrix", "recursive"}));

    CLI::App* mgo_cmd = app.add_subcommand("mgo", "the m=1 q-rational");
    mgo_cmd->add_option("--rational", rational)->required();

    CLI::App* stab_cmd = app.add_subcommand("stabilize", "stabilized series coefficients");
    stab_cmd->add_option("--cf", descriptor, "terms, optionally ':periodic=...' tail")->required();
    stab_cmd->add_option("--i", i)->required();
    stab_cmd->add_option("--m", m)->required();
    stab_cmd->add_option("--order", order)->required();

    CLI::App* pos_cmd = app.add_subcommand("positivity", "difference polynomial B*R - A*S");
    pos_cmd->add_option("--a", a_text, "larger rational r/s")->required();
    pos_cmd->add_option("--b", b_text, "smaller rational a/b")->required();
    pos_cmd->add_option("--i", i)->required();
    pos_cmd->add_option("--m", m)->required();
    pos_cmd->add_flag("--pairs", with_pairs, "include the complement pairs");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run golden example suite");
    verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"paper-examples"}));

    for (CLI::App* cmd : {cf_cmd, strip_cmd, omega_cmd, matrix_cmd, hcf_cmd, mgo_cmd, stab_cmd,
                          pos_cmd, verify_cmd})
        add_format(cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return 2;
    }

    bool text = format == "text";
    auto emit = [&](const json& payload) { out << payload.dump() << "\n"; };

    try {
        if (app.got_subcommand(cf_cmd)) {
            auto [r, s] = parse_rational(rational);
            ContinuedFraction cf = ContinuedFraction::from_rational(r, s);
            if (text) {
                for (size_t t = 0; t < cf.terms().size(); ++t)
                    out << (t ? "," : "") << cf.terms()[t];
                out << "\n";
            } else {
                emit(json{{"cf", cf.terms()}});
            }
        } else if (app.got_subcommand(strip_cmd)) {
            BorderStrip strip{ContinuedFraction(parse_terms(terms_text))};
            if (text)
                out << strip.ascii();
            else
                emit(to_json(strip));
        } else if (app.got_subcommand(omega_cmd)) {
            BorderStrip strip{ContinuedFraction(parse_terms(terms_text))};
            LaurentPoly p = omega_gf(strip, m, i, j,
                                     variant == "bar" ? OmegaVariant::Bar : OmegaVariant::Plain);
            if (text)
                out << p.to_string() << "\n";
            else
                emit(to_json(p));
        } else if (app.got_subcommand(matrix_cmd)) {
            PolyMatrix x = product_x(ContinuedFraction(parse_terms(terms_text)), m);
            if (q1) {
                json rows = json::array();
                for (const auto& row : x.eval_one()) {
                    json jrow = json::array();
                    for (const auto& v : row) jrow.push_back(v.str());
                    rows.push_back(jrow);
                }
                if (text) {
                    for (const auto& row : x.eval_one()) {
                        for (size_t t = 0; t < row.size(); ++t) out << (t ? " " : "") << row[t].str();
                        out << "\n";
                    }
                } else {
                    emit(json{{"matrix", rows}});
                }
            } else if (text) {
                out << matrix_text(x);
            } else {
                emit(json{{"matrix", to_json(x)}});
            }
        } else if (app.got_subcommand(hcf_cmd)) {
            auto [r, s] = parse_rational(rational);
            ContinuedFraction cf = ContinuedFraction::from_rational(r, s);
            bool has_i = hcf_cmd->count("--i") > 0;
            if (has_i && (i < 0 || i > m)) throw Usage("need 0 <= i <= m");
            if (q1) {
                if (has_i) {
                    std::string v = text_rational(hcf_q1(cf, i, m));
                    if (text)
                        out << v << "\n";
                    else
                        emit(json{{"cf", cf.terms()}, {"value", v}});
                } else {
                    json values = json::array();
                    std::ostringstream line;
                    for (const auto& v : hcf_q1_vector(cf, m)) {
                        if (values.size() > 0) line << ", ";
                        values.push_back(text_rational(v));
                        line << text_rational(v);
                    }
                    if (text)
                        out << line.str() << "\n";
                    else
                        emit(json{{"cf", cf.terms()}, {"values", values}});
                }
            } else {
                if (!has_i) throw Usage("--i is required unless --q1 is given");
                RatFunc f = route == "recursive" ? hcf_q_recursive(cf, i, m)
                                                 : hcf_q_matrix(cf, i, m);
                if (text)
                    out << "(" << f.num().to_string() << ") / (" << f.den().to_string() << ")\n";
                else
                    emit(json{{"cf", cf.terms()},
                              {"numerator", to_json(f.num())},
                              {"denominator", to_json(f.den())}});
            }
        } else if (app.got_subcommand(mgo_cmd)) {
            auto [r, s] = parse_rational(rational);
            ContinuedFraction cf = ContinuedFraction::from_rational(r, s);
            RatFunc f = mgo_qrational(cf);
            if (text)
                out << "(" << f.num().to_string() << ") / (" << f.den().to_string() << ")\n";
            else
                emit(json{{"cf", cf.terms()},
                          {"numerator", to_json(f.num())},
                          {"denominator", to_json(f.den())}});
        } else if (app.got_subcommand(stab_cmd)) {
            if (order < 0) throw Usage("--order must be >= 0");
            if (order > max_order_cap())
                throw Usage("--order exceeds QHCF_MAX_ORDER (" +
                            std::to_string(max_order_cap()) + ")");
            CFDescriptor d = parse_descriptor(descriptor);
            SeriesPrefix s = d.periodic.empty()
                                 ? expand_hcf(ContinuedFraction(d.prefix), i, m, order)
                                 : stable_series(IrrationalCF(d.prefix, d.periodic), i, m, order);
            if (text) {
                for (size_t t = 0; t < s.coeffs.size(); ++t)
                    out << (t ? " " : "") << s.coeffs[t].str();
                out << "\n";
            } else {
                emit(to_json(s));
            }
        } else if (app.got_subcommand(pos_cmd)) {
            auto [r, s] = parse_rational(a_text);
            auto [a, b] = parse_rational(b_text);
            PositivityProblem prob(r, s, a, b, i, m);
            LaurentPoly diff = prob.difference();
            if (text) {
                out << diff.to_string() << "\n";
                if (with_pairs)
                    for (const auto& p : prob.complement_pairs()) {
                        for (int l : p.left.labels) out << l;
                        out << " ; ";
                        for (int l : p.right.labels) out << l;
                        out << "\n";
                    }
            } else {
                json payload{{"difference", to_json(diff)}};
                if (with_pairs) {
                    json pairs = json::array();
                    for (const auto& p : prob.complement_pairs())
                        pairs.push_back(json{{"left", p.left.labels}, {"right", p.right.labels}});
                    payload["pairs"] = pairs;
                }
                emit(payload);
            }
        } else if (app.got_subcommand(verify_cmd)) {
            bool all_ok = true;
            json results = json::array();
            for (const auto& item : golden_examples()) {
                bool ok = false;
                try {
                    ok = item.check();
                } catch (const std::exception&) {
                    ok = false;
                }
                all_ok = all_ok && ok;
                if (text) out << (ok ? "PASS " : "FAIL ") << item.name << "\n";
                results.push_back(json{{"name", item.name}, {"pass", ok}});
            }
            if (!text)
                emit(json{{"suite", suite}, {"results", results}, {"pass", all_ok}});
            return all_ok ? 0 : 1;
        }
    } catch (const Usage& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const InvalidRational& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const IndexOutOfRange& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace qhcf::cli
