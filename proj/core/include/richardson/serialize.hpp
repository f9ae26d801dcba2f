#pragma once

#include <string>

#include "richardson/sweep.hpp"
#include "richardson/verify.hpp"

namespace richardson {

/// `{"dimension", "tangent_dim", "smooth", "mult", "h_poly"}` with h_poly the
/// coefficient list in ascending degree.
std::string invariants_json(const LocalInvariants& inv);
std::string invariants_text(const LocalInvariants& inv);
std::string invariants_csv_header();
/// One CSV row; `label` fills the leading columns (e.g. `1324,3412,1342`).
std::string invariants_csv_row(const std::string& label, const LocalInvariants& inv);

/// Rows of canonical polynomial strings.
std::string matrix_json(const ChartMatrix& m);
/// `{"u", "x", "eta1", "eta2"}`.
std::string sweep_json(const Chart& chart, const SweepImage& image);
std::string sweep_latex(const Chart& chart, const SweepImage& image);

/// LaTeX form of a polynomial, e.g. `z_{22}-z_{23}z_{52}`.
std::string polynomial_latex(const Polynomial& p);
std::string matrix_latex(const ChartMatrix& m);

/// Reports without wall time, so reruns are byte-identical.
std::string report_json(const VerificationReport& report);
std::string report_text(const VerificationReport& report);

}  // namespace richardson
