#include <cmath>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "stagxx/cli.hpp"
#include "stagxx/correlations.hpp"
#include "stagxx/entanglement.hpp"
#include "stagxx/oracle.hpp"
#include "stagxx/thermo.hpp"

namespace stagxx::cli {

namespace {

using correlations::Parity;

constexpr double kEdBand = 1e-3;
constexpr double kEdFinal = 0.02;
constexpr double kFfFinal = 1e-4;
constexpr double kFfFloor = 1e-12;

void add(CompareReport& rep, const char* source, int n, const std::string& q, double value, double reference) {
    rep.rows.push_back({source, n, q, value, reference, std::abs(value - reference)});
}

void expect(CompareReport& rep, const std::string& what, double gap, double tol) {
    if (!(gap <= tol)) rep.failures.push_back(what + ": gap " + format_number(gap) + " exceeds " + format_number(tol));
}

// Walks each (source, quantity) series in size order and applies the convergence rule.
void check_series(CompareReport& rep) {
    std::map<std::pair<std::string, std::string>, std::vector<const CompareRow*>> series;
    for (const auto& r : rep.rows) series[{r.source, r.quantity}].push_back(&r);
    for (const auto& [key, rows] : series) {
        const bool ed = key.first == "ed";
        const std::string label = key.first + " " + key.second;
        for (std::size_t k = 1; k < rows.size(); ++k) {
            const double prev = rows[k - 1]->gap;
            const double cur = rows[k]->gap;
            const bool ok = ed ? cur <= prev + kEdBand : (cur < prev || (prev < kFfFloor && cur < kFfFloor));
            if (!ok) {
                rep.failures.push_back(label + ": gap " + format_number(cur) + " at N=" +
                                       std::to_string(rows[k]->n_sites) + " does not improve on " +
                                       format_number(prev) + " at N=" + std::to_string(rows[k - 1]->n_sites));
            }
        }
        if (!rows.empty()) expect(rep, label + " at N=" + std::to_string(rows.back()->n_sites), rows.back()->gap,
                                  ed ? kEdFinal : kFfFinal);
    }
}

}  // namespace

CompareReport oracle_compare(const ChainParams& p, const Thermal& t, const std::vector<int>& ed_sizes,
                             const std::vector<int>& ff_sizes, const QuadSpec& quad) {
    const auto cs = correlations::CorrelationSet::compute(p, t, 3, quad);
    const double u = thermo::internal_energy(p, t, quad);
    const auto c1 = entanglement::c1(cs);

    CompareReport rep;
    for (int n : ed_sizes) {
        const auto r = oracle::dense_ed({n, p, t});
        add(rep, "ed", n, "u", r.energy_per_site, u);
        add(rep, "ed", n, "m", r.magnetization, cs.sigma_z().uniform);
        add(rep, "ed", n, "m_s", r.staggered_magnetization, cs.sigma_z().staggered);
        add(rep, "ed", n, "c1_odd", r.c1().odd, c1.odd);
        add(rep, "ed", n, "c1_even", r.c1().even, c1.even);
        add(rep, "ed", n, "zz1_odd", r.pair(Parity::Odd, 1).zz, cs.zz(Parity::Odd, 1));
        add(rep, "ed", n, "zz1_even", r.pair(Parity::Even, 1).zz, cs.zz(Parity::Even, 1));
    }
    for (int n : ff_sizes) {
        const auto f = oracle::finite_free_fermion({n, p, t}, 3);
        add(rep, "ff", n, "u", f.u, u);
        add(rep, "ff", n, "m", f.m, cs.sigma_z().uniform);
        add(rep, "ff", n, "m_s", f.m_s, cs.sigma_z().staggered);
        for (int R = 1; R <= 3; ++R) {
            const auto& g = cs.g(R);
            add(rep, "ff", n, "g" + std::to_string(R) + "_0", f.g[R - 1].g0, g.g0);
            add(rep, "ff", n, "g" + std::to_string(R) + "_s", f.g[R - 1].gs, g.gs);
        }
    }
    check_series(rep);
    return rep;
}

CompareReport oracle_examples() {
    CompareReport rep;
    const Thermal t0 = Thermal::zero();

    const ChainParams dimer(1.0, 1.0, 0.0, 0.0);
    const auto d = oracle::dense_ed({4, dimer, t0});
    add(rep, "ed", 4, "dimer c1_odd", d.c1().odd, 0.0);
    add(rep, "ed", 4, "dimer c1_even", d.c1().even, 1.0);

    const ChainParams polarized(1.0, 0.0, 10.0, 0.0);
    const auto pol = oracle::dense_ed({4, polarized, t0});
    add(rep, "ed", 4, "polarized e_mw", pol.e_mw, 0.0);
    add(rep, "ed", 4, "polarized m", pol.magnetization, 1.0);

    const ChainParams xx(1.0, 0.0, 0.0, 0.0);
    const auto c1_xx = entanglement::c1(xx, t0);
    const auto x12 = oracle::dense_ed({12, xx, t0});
    add(rep, "ed", 12, "xx c1_odd", x12.c1().odd, c1_xx.odd);
    add(rep, "ed", 12, "xx c1_even", x12.c1().even, c1_xx.even);

    const ChainParams mid(1.0, 0.5, 0.6, 0.5);
    const Thermal warm = Thermal::finite(2.0);
    const double u_mid = thermo::internal_energy(mid, warm);
    for (int n : {1 << 8, 1 << 10, 1 << 12, 1 << 14}) {
        add(rep, "ff", n, "u", oracle::finite_free_fermion({n, mid, warm}, 1).u, u_mid);
    }

    const Thermal hot = Thermal::finite(0.2);
    const double ed8 = oracle::dense_ed({8, mid, hot}).energy_per_site;
    add(rep, "ff-vs-ed", 8, "u boundary term", oracle::finite_free_fermion({8, mid, hot}, 1).u, ed8);

    for (const auto& r : rep.rows) {
        const std::string what = r.source + " N=" + std::to_string(r.n_sites) + " " + r.quantity;
        if (r.source == "ed") expect(rep, what, r.gap, r.n_sites == 4 ? 1e-10 : 0.01);
        if (r.source == "ff" && r.n_sites == (1 << 10)) expect(rep, what, r.gap, kFfFinal);
    }
    return rep;
}

void write_report(const CompareReport& report, std::ostream& out) {
    out << "source,n,quantity,value,reference,gap\n";
    for (const auto& r : report.rows) {
        out << r.source << ',' << r.n_sites << ',' << r.quantity << ',' << format_number(r.value) << ','
            << format_number(r.reference) << ',' << format_number(r.gap) << '\n';
    }
}

}  // namespace stagxx::cli
