#pragma once
// Text forms of functions and measures, and JSON / CSV emitters for reports.
//
// Functions:  poly:c0,c1,...   lemma8:b,alpha   log:b   logsq:w   power:b,gamma[,scale]
//             h:a,alpha   psi:a,alpha   sum(F;F;...)   scale(c;F)
// Measures:   power:sigma   logpower:sigma,tau   area   atomic:z,m,z,m,...   zero
//             separable(power:e|logpower:e,tau ; uniform|cosine:k,t0|cusp:k,t0)
//             induced(F;p,alpha,s)   restrict(M;r)
// Complex literals: 0.5, -0.2i, 0.3+0.4i, 1e-3-2i.

#include "fpqs/carleson.hpp"
#include "fpqs/funcspace.hpp"
#include "fpqs/measures.hpp"
#include "fpqs/operators.hpp"
#include "fpqs/search.hpp"
#include "fpqs/verify.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fpqs::io {

using Json = nlohmann::ordered_json;

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr const char* kFunctionKinds = "poly, lemma8, log, logsq, power, h, psi, sum, scale";
inline constexpr const char* kMeasureKinds = "power, logpower, area, atomic, zero, separable, induced, restrict";

// ---- scalars ----------------------------------------------------------------------

inline std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

inline double parse_real(std::string_view sv) {
    const std::string s = trim(sv);
    double v = 0.0;
    const char* first = s.data();
    if (!s.empty() && s[0] == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("invalid number '" + s + "'");
    return v;
}

inline cplx parse_complex(std::string_view sv) {
    const std::string s = trim(sv);
    if (s.empty()) throw ParseError("empty complex literal");
    if (s.back() != 'i') return {parse_real(s), 0.0};
    const std::string body = s.substr(0, s.size() - 1);
    // split at the last sign that is not leading and not an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    auto imag_part = [](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_real(t);
    };
    if (split == std::string::npos) return {0.0, imag_part(body)};
    return {parse_real(body.substr(0, split)), imag_part(body.substr(split))};
}

// Shortest round-trip decimal.
inline std::string format_real(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc()) throw std::runtime_error("format_real failed");
    return std::string(buf, ptr);
}

inline std::string format_complex(cplx z) {
    if (z.imag() == 0.0) return format_real(z.real());
    std::string im = format_real(z.imag());
    if (im[0] != '-') im = "+" + im;
    return format_real(z.real()) + im + "i";
}

// Splits on `sep` at parenthesis depth zero.
inline std::vector<std::string> split_top(std::string_view s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') {
            if (--depth < 0) throw ParseError("unbalanced ')' in '" + std::string(s) + "'");
        }
        if (s[i] == sep && depth == 0) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    if (depth != 0) throw ParseError("unbalanced '(' in '" + std::string(s) + "'");
    out.push_back(trim(s.substr(start)));
    return out;
}

namespace detail {

struct Head {
    std::string name;
    std::string args;
    bool call = false;  // name(args) instead of name:args
};

inline Head split_head(const std::string& s) {
    Head h;
    const auto colon = s.find(':');
    const auto paren = s.find('(');
    if (paren != std::string::npos && (colon == std::string::npos || paren < colon)) {
        if (s.back() != ')') throw ParseError("expected ')' at end of '" + s + "'");
        h.name = trim(s.substr(0, paren));
        h.args = s.substr(paren + 1, s.size() - paren - 2);
        h.call = true;
    } else if (colon != std::string::npos) {
        h.name = trim(s.substr(0, colon));
        h.args = s.substr(colon + 1);
    } else {
        h.name = trim(s);
    }
    return h;
}

inline std::vector<std::string> list(const std::string& args) {
    if (trim(args).empty()) return {};
    return split_top(args, ',');
}

inline void want(const std::string& kind, const std::vector<std::string>& a, std::size_t lo, std::size_t hi) {
    if (a.size() < lo || a.size() > hi)
        throw ParseError(kind + ": expected " + std::to_string(lo) + (hi != lo ? "-" + std::to_string(hi) : "") +
                         " parameters, got " + std::to_string(a.size()));
}

inline DiskPoint disk_point(const std::string& s) {
    const cplx z = parse_complex(s);
    if (!(std::abs(z) < 1.0)) throw ParseError("point " + s + " is not inside the unit disk");
    return DiskPoint(z);
}

}  // namespace detail

// ---- functions --------------------------------------------------------------------

inline AnalyticFunction parse_function(std::string_view text) {
    const std::string s = trim(text);
    if (s.empty()) throw ParseError("empty function spec; valid kinds: " + std::string(kFunctionKinds));
    const auto h = detail::split_head(s);
    try {
        if (h.call) {
            const auto parts = split_top(h.args, ';');
            if (h.name == "sum") {
                std::vector<AnalyticFunction> fs;
                for (const auto& p : parts) fs.push_back(parse_function(p));
                return sum(std::move(fs));
            }
            if (h.name == "scale") {
                detail::want("scale", parts, 2, 2);
                return scaled(parse_complex(parts[0]), parse_function(parts[1]));
            }
        } else {
            const auto a = detail::list(h.args);
            if (h.name == "poly") {
                if (a.empty()) throw ParseError("poly: needs at least one coefficient");
                std::vector<cplx> c;
                for (const auto& x : a) c.push_back(parse_complex(x));
                return polynomial(std::move(c));
            }
            if (h.name == "lemma8") {
                detail::want("lemma8", a, 2, 2);
                return lemma_eight(detail::disk_point(a[0]), parse_real(a[1]));
            }
            if (h.name == "log") {
                detail::want("log", a, 1, 1);
                return log_kernel(detail::disk_point(a[0]));
            }
            if (h.name == "logsq") {
                detail::want("logsq", a, 1, 1);
                return normalized_log_square(detail::disk_point(a[0]));
            }
            if (h.name == "power") {
                detail::want("power", a, 2, 3);
                return power_kernel(detail::disk_point(a[0]), parse_real(a[1]),
                                    a.size() == 3 ? parse_complex(a[2]) : cplx(1.0));
            }
            if (h.name == "h") {
                detail::want("h", a, 2, 2);
                return h_family(detail::disk_point(a[0]), parse_real(a[1]));
            }
            if (h.name == "psi") {
                detail::want("psi", a, 2, 2);
                return psi_family(detail::disk_point(a[0]), parse_real(a[1]));
            }
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown function kind '" + h.name + "'; valid kinds: " + kFunctionKinds);
}

inline std::string format_function(const AnalyticFunction& f) {
    return std::visit(
        fpqs::detail::overloaded{
            [](const fn::Polynomial& p) {
                std::string s = "poly:";
                for (std::size_t i = 0; i < p.coeffs.size(); ++i) s += (i ? "," : "") + format_complex(p.coeffs[i]);
                return s;
            },
            [](const fn::LemmaEight& x) { return "lemma8:" + format_complex(x.b) + "," + format_real(x.alpha); },
            [](const fn::LogKernel& x) { return "log:" + format_complex(x.b); },
            [](const fn::NormalizedLogSquare& x) { return "logsq:" + format_complex(x.w); },
            [](const fn::PowerKernel& x) {
                return "power:" + format_complex(x.b) + "," + format_real(x.gamma) + "," + format_complex(x.scale);
            },
            [](const fn::HFamily& x) { return "h:" + format_complex(x.a) + "," + format_real(x.alpha); },
            [](const fn::PsiFamily& x) { return "psi:" + format_complex(x.a) + "," + format_real(x.alpha); },
            [](const fn::Sum& x) {
                std::string s = "sum(";
                for (std::size_t i = 0; i < x.terms.size(); ++i) s += (i ? ";" : "") + format_function(*x.terms[i]);
                return s + ")";
            },
            [](const fn::Scaled& x) { return "scale(" + format_complex(x.c) + ";" + format_function(*x.inner) + ")"; },
        },
        f.variant());
}

// ---- measures ---------------------------------------------------------------------

inline MeasureSpec parse_measure(std::string_view text) {
    const std::string s = trim(text);
    if (s.empty()) throw ParseError("empty measure spec; valid kinds: " + std::string(kMeasureKinds));
    const auto h = detail::split_head(s);
    try {
        if (h.call) {
            const auto parts = split_top(h.args, ';');
            if (h.name == "separable") {
                detail::want("separable", parts, 2, 2);
                ms::RadialProfile R;
                const auto rh = detail::split_head(parts[0]);
                const auto ra = detail::list(rh.args);
                if (rh.name == "power") {
                    detail::want("separable radial power", ra, 1, 1);
                    R = {ms::RadialProfile::Power, parse_real(ra[0]), 0.0};
                } else if (rh.name == "logpower") {
                    detail::want("separable radial logpower", ra, 2, 2);
                    R = {ms::RadialProfile::LogPower, parse_real(ra[0]), parse_real(ra[1])};
                } else {
                    throw ParseError("unknown radial profile '" + rh.name + "'; valid: power, logpower");
                }
                ms::AngularProfile A;
                const auto ah = detail::split_head(parts[1]);
                const auto aa = detail::list(ah.args);
                if (ah.name == "uniform") {
                    detail::want("separable angular uniform", aa, 0, 0);
                } else if (ah.name == "cosine" || ah.name == "cusp") {
                    detail::want("separable angular " + ah.name, aa, 2, 2);
                    A = {ah.name == "cosine" ? ms::AngularProfile::Cosine : ms::AngularProfile::Cusp,
                         parse_real(aa[0]), parse_real(aa[1])};
                } else {
                    throw ParseError("unknown angular profile '" + ah.name + "'; valid: uniform, cosine, cusp");
                }
                return separable(R, A);
            }
            if (h.name == "induced") {
                detail::want("induced", parts, 2, 2);
                const auto pa = detail::list(parts[1]);
                detail::want("induced parameters", pa, 3, 3);
                return induced(parse_function(parts[0]),
                               SpaceParams(parse_real(pa[0]), parse_real(pa[1]), parse_real(pa[2])));
            }
            if (h.name == "restrict") {
                detail::want("restrict", parts, 2, 2);
                return restrict(parse_measure(parts[0]), parse_real(parts[1]));
            }
        } else {
            const auto a = detail::list(h.args);
            if (h.name == "power") {
                detail::want("power", a, 1, 1);
                return power_density(parse_real(a[0]));
            }
            if (h.name == "logpower") {
                detail::want("logpower", a, 2, 2);
                return log_power_density(parse_real(a[0]), parse_real(a[1]));
            }
            if (h.name == "area") {
                detail::want("area", a, 0, 0);
                return area_measure();
            }
            if (h.name == "zero") {
                detail::want("zero", a, 0, 0);
                return zero_measure();
            }
            if (h.name == "atomic") {
                if (a.size() % 2) throw ParseError("atomic: expected point,mass pairs");
                std::vector<ms::Atom> atoms;
                for (std::size_t i = 0; i < a.size(); i += 2)
                    atoms.push_back({detail::disk_point(a[i]), parse_real(a[i + 1])});
                return atomic(std::move(atoms));
            }
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown measure kind '" + h.name + "'; valid kinds: " + kMeasureKinds);
}

inline std::string format_measure(const MeasureSpec& mu) {
    return std::visit(
        fpqs::detail::overloaded{
            [](const ms::PowerDensity& m) { return "power:" + format_real(m.sigma); },
            [](const ms::LogPowerDensity& m) { return "logpower:" + format_real(m.sigma) + "," + format_real(m.tau); },
            [](const ms::Separable& m) {
                std::string r = m.radial.kind == ms::RadialProfile::Power
                                    ? "power:" + format_real(m.radial.e)
                                    : "logpower:" + format_real(m.radial.e) + "," + format_real(m.radial.tau);
                std::string a = m.angular.kind == ms::AngularProfile::Uniform ? "uniform"
                                : (m.angular.kind == ms::AngularProfile::Cosine ? "cosine:" : "cusp:") +
                                      format_real(m.angular.k) + "," + format_real(m.angular.t0);
                return "separable(" + r + ";" + a + ")";
            },
            [](const ms::Atomic& m) {
                std::string s = "atomic:";
                for (std::size_t i = 0; i < m.atoms.size(); ++i)
                    s += (i ? "," : "") + format_complex(m.atoms[i].z) + "," + format_real(m.atoms[i].mass);
                return s;
            },
            [](const ms::Induced& m) {
                return "induced(" + format_function(m.g) + ";" + format_real(m.params.p) + "," +
                       format_real(m.params.alpha) + "," + format_real(m.params.s) + ")";
            },
            [](const ms::Restricted& m) { return "restrict(" + format_measure(*m.inner) + ";" + format_real(m.r) + ")"; },
        },
        mu.variant());
}

// ---- JSON -------------------------------------------------------------------------

// 12 significant digits; non-finite values become null.
inline Json num(double x) {
    if (!std::isfinite(x)) return nullptr;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

inline Json point_json(cplx z) { return Json::array({num(z.real()), num(z.imag())}); }

inline Json maximizer_json(const Maximizer& m) {
    if (const auto* p = std::get_if<DiskPoint>(&m)) return Json{{"point", point_json(*p)}};
    if (const auto* a = std::get_if<Arc>(&m)) return Json{{"arc", {{"center", num(a->center)}, {"length", num(a->length)}}}};
    return nullptr;
}

inline Json to_json(const ConstantReport& r) {
    Json j;
    j["value"] = num(r.value);
    j["raw_value"] = num(r.raw_value);
    j["maximizer"] = maximizer_json(r.maximizer);
    j["samples_evaluated"] = r.samples_evaluated;
    j["converged"] = r.converged;
    j["error_estimate"] = num(r.error_estimate);
    if (r.depth >= 0) j["depth"] = r.depth;
    Json prof = Json::array();
    for (auto [x, v] : r.profile) prof.push_back(Json::array({num(x), num(v)}));
    j["profile"] = prof;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline Json to_json(const EmbeddingReport& r) {
    Json j;
    j["depth"] = r.depth;
    j["max_ratio"] = num(r.max_ratio);
    j["median_ratio"] = num(r.median_ratio);
    Json e = Json::array();
    for (const auto& x : r.entries)
        e.push_back({{"label", x.label}, {"tent", num(x.tent)}, {"full", num(x.full)}, {"ratio", num(x.ratio)},
                     {"converged", x.converged}});
    j["entries"] = e;
    return j;
}

inline Json to_json(const OperatorReport& r) {
    Json j;
    j["operator"] = operator_name(r.kind);
    j["panel1"] = {{"label", r.panel1_label}, {"report", to_json(r.panel1)}};
    j["panel2"] = {{"label", r.panel2_label}, {"report", to_json(r.panel2)}};
    Json e = Json::array();
    for (const auto& x : r.entries)
        e.push_back({{"label", x.label}, {"op_norm", num(x.op_norm)}, {"f_norm", num(x.f_norm)}, {"ratio", num(x.ratio)}});
    j["panel3"] = {{"entries", e}, {"max_ratio", num(r.max_ratio)}, {"median_ratio", num(r.median_ratio)}};
    if (!r.flag.empty()) j["flag"] = r.flag;
    return j;
}

inline Json to_json(const SuiteCase& c) {
    Json j;
    j["description"] = c.description;
    j["measured"] = num(c.measured);
    if (c.trend.empty()) {
        j["bracket"] = Json::array({num(c.lo), num(c.hi)});
    } else {
        j["trend"] = c.trend;
        Json v = Json::array();
        for (double x : c.values) v.push_back(num(x));
        j["values"] = v;
    }
    j["pass"] = c.pass;
    if (!c.converged) j["converged"] = false;
    if (!c.diagnostics.empty()) j["diagnostics"] = c.diagnostics;
    return j;
}

// wall_time is deliberately left out: reports must be byte-identical across runs.
inline Json to_json(const SuiteReport& r) {
    Json j;
    j["suite_id"] = r.suite_id;
    j["version"] = kSuiteVersion;
    j["pass"] = r.pass();
    Json cases = Json::array();
    for (const auto& c : r.cases) cases.push_back(to_json(c));
    j["cases"] = cases;
    return j;
}

inline Json to_json(const std::vector<SuiteReport>& rs) {
    Json j;
    bool all = true;
    Json arr = Json::array();
    for (const auto& r : rs) {
        all = all && r.pass();
        arr.push_back(to_json(r));
    }
    j["pass"] = all;
    j["suites"] = arr;
    return j;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---- CSV --------------------------------------------------------------------------

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string csv_num(double x) { return num(x).dump(); }

inline std::string suites_csv(const std::vector<SuiteReport>& rs) {
    std::ostringstream o;
    o << "suite_id,case,description,measured,lo,hi,trend,pass\n";
    for (const auto& r : rs)
        for (std::size_t i = 0; i < r.cases.size(); ++i) {
            const auto& c = r.cases[i];
            o << r.suite_id << ',' << i << ',' << csv_field(c.description) << ',' << csv_num(c.measured) << ','
              << (c.trend.empty() ? csv_num(c.lo) : "") << ',' << (c.trend.empty() ? csv_num(c.hi) : "") << ','
              << csv_field(c.trend) << ',' << (c.pass ? "true" : "false") << '\n';
        }
    return o.str();
}

// Profile table for plotting: x is |a| for point searches and the depth k for arc sups.
inline std::string report_csv(const ConstantReport& r) {
    std::ostringstream o;
    o << "x,value\n";
    for (auto [x, v] : r.profile) o << csv_num(x) << ',' << csv_num(v) << '\n';
    return o.str();
}

inline std::string embedding_csv(const EmbeddingReport& r) {
    std::ostringstream o;
    o << "label,tent,full,ratio,converged\n";
    for (const auto& e : r.entries)
        o << csv_field(e.label) << ',' << csv_num(e.tent) << ',' << csv_num(e.full) << ',' << csv_num(e.ratio) << ','
          << (e.converged ? "true" : "false") << '\n';
    return o.str();
}

inline std::string operator_csv(const OperatorReport& r) {
    std::ostringstream o;
    o << "label,op_norm,f_norm,ratio\n";
    for (const auto& e : r.entries)
        o << csv_field(e.label) << ',' << csv_num(e.op_norm) << ',' << csv_num(e.f_norm) << ',' << csv_num(e.ratio)
          << '\n';
    return o.str();
}

}  // namespace fpqs::io
