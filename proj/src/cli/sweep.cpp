#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "stagxx/cli.hpp"

namespace stagxx::cli {

namespace {

struct GridPoint {
    ChainParams params;
    double temperature;
};

GridPoint apply(GridPoint g, AxisParam a, double v) {
    switch (a) {
        case AxisParam::B: g.params = g.params.with_B(v); break;
        case AxisParam::b: g.params = g.params.with_b(v); break;
        case AxisParam::j: g.params = g.params.with_j(v); break;
        case AxisParam::T: g.temperature = v; break;
    }
    return g;
}

}  // namespace

int run_sweep(const SweepSpec& spec, std::ostream& out) {
    spec.validate();
    const auto nx = static_cast<std::size_t>(spec.x.steps);
    const auto total = nx * static_cast<std::size_t>(spec.y.steps);

    std::vector<Record> records(total);
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::atomic<bool> failed{false};

    auto work = [&] {
        for (std::size_t i = next++; i < total && !failed; i = next++) {
            const int ix = static_cast<int>(i % nx);
            const int iy = static_cast<int>(i / nx);
            const GridPoint g = apply(apply({spec.params, spec.temperature}, spec.x.param, spec.x.at(ix)),
                                      spec.y.param, spec.y.at(iy));
            try {
                records[i] = run_point(g.params, g.temperature, spec.quantities, spec.quad);
            } catch (...) {
                // Anything not folded into the record (e.g. T < 0 on an axis) aborts the sweep.
                if (!failed.exchange(true)) first_error = std::current_exception();
            }
        }
    };

    const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
    const auto workers = static_cast<std::size_t>(spec.workers > 0 ? spec.workers : static_cast<int>(hw));
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 1; w < std::min(workers, total); ++w) pool.emplace_back(work);
        work();
    }
    if (first_error) std::rethrow_exception(first_error);

    out << "x,y";
    for (Quantity q : spec.quantities) out << ',' << name(q);
    out << ",err_flags\n";
    int code = kExitOk;
    for (std::size_t i = 0; i < total; ++i) {
        const Record& r = records[i];
        out << format_number(spec.x.at(static_cast<int>(i % nx))) << ','
            << format_number(spec.y.at(static_cast<int>(i / nx)));
        for (double v : r.values) out << ',' << format_number(v);
        out << ',';
        for (std::size_t k = 0; k < r.errors.size(); ++k) out << (k ? ";" : "") << r.errors[k];
        out << '\n';
        code = std::max(code, r.exit_code);
    }
    return code;
}

}  // namespace stagxx::cli
