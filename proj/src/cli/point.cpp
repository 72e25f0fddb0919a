#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include <boost/algorithm/string/join.hpp>
#include <boost/algorithm/string/split.hpp>
#include <boost/algorithm/string/trim.hpp>

#include "stagxx/cli.hpp"
#include "stagxx/correlations.hpp"
#include "stagxx/entanglement.hpp"
#include "stagxx/errors.hpp"
#include "stagxx/ground.hpp"
#include "stagxx/thermo.hpp"

namespace stagxx::cli {

namespace {

constexpr std::array<std::pair<Quantity, std::string_view>, 11> kQuantityNames{{
    {Quantity::u, "u"},
    {Quantity::m, "m"},
    {Quantity::m_s, "m_s"},
    {Quantity::e_mw, "e_mw"},
    {Quantity::c1_odd, "c1_odd"},
    {Quantity::c1_even, "c1_even"},
    {Quantity::c2_odd, "c2_odd"},
    {Quantity::c2_even, "c2_even"},
    {Quantity::witness_lhs, "witness_lhs"},
    {Quantity::energy_t0, "energy_t0"},
    {Quantity::m_t0, "m_t0"},
}};

// Memoizes the shared intermediate results of one parameter point.
class PointEvaluator {
public:
    PointEvaluator(const ChainParams& p, const Thermal& t, const QuadSpec& quad, int max_r)
        : p_(p), t_(t), quad_(quad), max_r_(max_r) {}

    double evaluate(Quantity q) {
        switch (q) {
            case Quantity::u: return u();
            case Quantity::m: return sz().uniform;
            case Quantity::m_s: return sz().staggered;
            case Quantity::e_mw: return ground::meyer_wallach(p_, quad_);
            case Quantity::c1_odd: return entanglement::c1(set()).odd;
            case Quantity::c1_even: return entanglement::c1(set()).even;
            case Quantity::c2_odd: return entanglement::c2(set()).odd;
            case Quantity::c2_even: return entanglement::c2(set()).even;
            case Quantity::witness_lhs: return entanglement::witness(p_, u(), sz().uniform, sz().staggered).lhs;
            case Quantity::energy_t0: return ground::energy(p_, quad_);
            case Quantity::m_t0: return ground::magnetization_t0(p_);
        }
        throw std::logic_error("unhandled quantity");
    }

private:
    double u() {
        if (!u_) u_ = thermo::internal_energy(p_, t_, quad_);
        return *u_;
    }

    const correlations::SigmaZ& sz() {
        if (set_) return set_->sigma_z();
        if (!sz_) sz_ = correlations::sigma_z(p_, t_, quad_);
        return *sz_;
    }

    const correlations::CorrelationSet& set() {
        if (!set_) set_ = correlations::CorrelationSet::compute(p_, t_, max_r_, quad_);
        return *set_;
    }

    ChainParams p_;
    Thermal t_;
    QuadSpec quad_;
    int max_r_;
    std::optional<double> u_;
    std::optional<correlations::SigmaZ> sz_;
    std::optional<correlations::CorrelationSet> set_;
};

}  // namespace

std::string_view name(Quantity q) noexcept {
    for (const auto& [k, v] : kQuantityNames) {
        if (k == q) return v;
    }
    return "?";
}

std::optional<Quantity> quantity_from_name(std::string_view s) {
    for (const auto& [k, v] : kQuantityNames) {
        if (v == s) return k;
    }
    return std::nullopt;
}

std::vector<Quantity> parse_quantities(std::string_view list) {
    std::vector<std::string> parts;
    boost::split(parts, list, [](char c) { return c == ','; });
    std::vector<Quantity> out;
    for (auto& part : parts) {
        boost::trim(part);
        const auto q = quantity_from_name(part);
        if (!q) throw ValidationError("unknown quantity '" + part + "'");
        for (Quantity seen : out) {
            if (seen == *q) throw ValidationError("quantity '" + part + "' listed twice");
        }
        out.push_back(*q);
    }
    return out;
}

bool zero_temperature_only(Quantity q) noexcept {
    return q == Quantity::e_mw || q == Quantity::energy_t0 || q == Quantity::m_t0;
}

Record run_point(const ChainParams& p, double temperature, const std::vector<Quantity>& quantities,
                 const QuadSpec& quad) {
    if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
        throw ValidationError("temperature must be finite and non-negative");
    }
    int max_r = 1;
    for (Quantity q : quantities) {
        if (temperature > 0.0 && zero_temperature_only(q)) {
            throw ValidationError("quantity '" + std::string(name(q)) + "' is defined only at T = 0");
        }
        if (q == Quantity::c2_odd || q == Quantity::c2_even) max_r = 2;
    }

    PointEvaluator eval(p, Thermal::from_temperature(temperature), quad, max_r);
    Record r;
    r.values.reserve(quantities.size());
    for (Quantity q : quantities) {
        auto fail = [&](const char* kind, int code) {
            r.values.push_back(std::numeric_limits<double>::quiet_NaN());
            r.errors.push_back(std::string(name(q)) + ":" + kind);
            r.exit_code = std::max(r.exit_code, code);
        };
        try {
            r.values.push_back(eval.evaluate(q));
        } catch (const ToleranceNotReached&) {
            fail("tolerance", kExitNumerical);
        } catch (const NegativeRadicand&) {
            fail("radicand", kExitNumerical);
        } catch (const DegenerateCoupling&) {
            fail("degenerate", kExitValidation);
        }
    }
    return r;
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.12g", v);
    return buf.data();
}

std::string point_header(const std::vector<Quantity>& quantities) {
    std::string h = "J,j,B,b,T";
    for (Quantity q : quantities) h += "," + std::string(name(q));
    return h + ",err_flags";
}

std::string point_row(const ChainParams& p, double temperature, const Record& r) {
    std::string row = format_number(p.J()) + "," + format_number(p.j()) + "," + format_number(p.B()) + "," +
                      format_number(p.b()) + "," + format_number(temperature);
    for (double v : r.values) row += "," + format_number(v);
    return row + "," + boost::algorithm::join(r.errors, ";");
}

}  // namespace stagxx::cli
