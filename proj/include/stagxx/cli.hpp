#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stagxx/model.hpp"
#include "stagxx/quadrature.hpp"

// Point evaluation, sweeps, config loading and oracle reports behind the stagxx tool.
namespace stagxx::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Quantity { u, m, m_s, e_mw, c1_odd, c1_even, c2_odd, c2_even, witness_lhs, energy_t0, m_t0 };

std::string_view name(Quantity q) noexcept;
std::optional<Quantity> quantity_from_name(std::string_view s);
/// Comma-separated names; throws ValidationError on an unknown or repeated name.
std::vector<Quantity> parse_quantities(std::string_view list);
/// Ground-state quantities that have no finite-temperature meaning.
bool zero_temperature_only(Quantity q) noexcept;

enum class AxisParam { B, b, j, T };

std::string_view name(AxisParam a) noexcept;
std::optional<AxisParam> axis_from_name(std::string_view s);

struct Axis {
    AxisParam param = AxisParam::B;
    double start = 0.0;
    double stop = 1.0;
    int steps = 2;

    /// Evenly spaced, both ends included.
    double at(int i) const noexcept;
};

/// "name,start,stop,steps", e.g. "B,0,2,50".
Axis parse_axis(std::string_view text);

struct SweepSpec {
    Axis x{AxisParam::B, 0.0, 2.0, 11};
    Axis y{AxisParam::b, 0.0, 2.0, 11};
    ChainParams params{1.0, 0.0, 0.0, 0.0};
    double temperature = 0.0;
    std::vector<Quantity> quantities{Quantity::u, Quantity::m};
    QuadSpec quad{};
    int workers = 0;  // 0 picks the hardware concurrency

    /// Throws ValidationError naming the offending field.
    void validate() const;
};

/// Reads the [model], [thermal], [sweep] and [quadrature] tables. Syntax errors
/// carry the line number; unknown keys and bad values name the key.
SweepSpec parse_config(std::istream& in, const std::string& source = "config");
SweepSpec load_config(const std::filesystem::path& path);

struct Record {
    std::vector<double> values;       // NaN where the quantity failed
    std::vector<std::string> errors;  // "quantity:kind"
    int exit_code = kExitOk;          // worst failure in this record
};

/// Evaluates each quantity independently so one failure does not hide the others.
/// Throws ValidationError for a zero-temperature-only quantity at T > 0.
Record run_point(const ChainParams& p, double temperature, const std::vector<Quantity>& quantities,
                 const QuadSpec& quad = {});

/// 12 significant digits; negative zero prints as 0.
std::string format_number(double v);

std::string point_header(const std::vector<Quantity>& quantities);
std::string point_row(const ChainParams& p, double temperature, const Record& r);

/// Header "x,y,<quantities>,err_flags" followed by x-fastest rows. The bytes
/// written do not depend on the worker count. Returns the exit code.
int run_sweep(const SweepSpec& spec, std::ostream& out);

struct CompareRow {
    std::string source;  // "ed" or "ff"
    int n_sites = 0;
    std::string quantity;
    double value = 0.0;
    double reference = 0.0;
    double gap = 0.0;
};

struct CompareReport {
    std::vector<CompareRow> rows;
    std::vector<std::string> failures;
    bool passed() const noexcept { return failures.empty(); }
};

/// Finite-size convergence of dense ED and free-fermion sums towards the integrals.
/// ED gaps must not grow by more than 1e-3 from one size to the next and end below
/// 0.02; free-fermion gaps must fall strictly (or sit below 1e-12) and end below 1e-4.
CompareReport oracle_compare(const ChainParams& p, const Thermal& t, const std::vector<int>& ed_sizes,
                             const std::vector<int>& ff_sizes, const QuadSpec& quad = {});

/// The fixed oracle checkpoints: N = 4 dimer and polarized rings, the N = 12 XX
/// concurrence, a 2^10 momentum sum, and the N = 8 boundary-term gap (reported only).
CompareReport oracle_examples();

void write_report(const CompareReport& report, std::ostream& out);

}  // namespace stagxx::cli
