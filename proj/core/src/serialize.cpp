#include "richardson/serialize.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace richardson {

namespace {

using nlohmann::ordered_json;

ordered_json invariants_object(const LocalInvariants& inv) {
    ordered_json h = ordered_json::array();
    for (const auto& c : inv.h_polynomial.coefficients()) h.push_back(c.get_si());
    return {{"dimension", inv.dimension},
            {"tangent_dim", inv.tangent_dim},
            {"smooth", inv.is_smooth},
            {"mult", inv.multiplicity.get_si()},
            {"h_poly", h}};
}

ordered_json matrix_object(const ChartMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 1; i <= m.n(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 1; j <= m.n(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

std::string variable_latex(const std::string& name) {
    std::size_t k = 0;
    while (k < name.size() && std::isalpha(static_cast<unsigned char>(name[k]))) ++k;
    if (k == name.size()) return name;
    std::string index = name.substr(k);
    for (auto& ch : index)
        if (ch == '_') ch = ',';
    return name.substr(0, k) + "_{" + index + "}";
}

}  // namespace

std::string invariants_json(const LocalInvariants& inv) { return invariants_object(inv).dump(2); }

std::string invariants_text(const LocalInvariants& inv) {
    std::ostringstream out;
    out << "dimension    " << inv.dimension << "\n"
        << "tangent_dim  " << inv.tangent_dim << "\n"
        << "smooth       " << (inv.is_smooth ? "yes" : "no") << "\n"
        << "multiplicity " << inv.multiplicity.get_str() << "\n"
        << "H(q)         " << inv.h_polynomial.to_string() << "\n";
    return out.str();
}

std::string invariants_csv_header() { return "v,w,sigma,dimension,tangent_dim,smooth,mult,h_poly"; }

std::string invariants_csv_row(const std::string& label, const LocalInvariants& inv) {
    std::string h;
    for (std::size_t k = 0; k < inv.h_polynomial.coefficients().size(); ++k)
        h += (k ? ";" : "") + inv.h_polynomial.coefficients()[k].get_str();
    return label + "," + std::to_string(inv.dimension) + "," + std::to_string(inv.tangent_dim) + "," +
           (inv.is_smooth ? "true" : "false") + "," + inv.multiplicity.get_str() + "," + h;
}

std::string matrix_json(const ChartMatrix& m) { return matrix_object(m).dump(2); }

std::string sweep_json(const Chart& chart, const SweepImage& image) {
    ordered_json out = {{"u", chart.u().to_string()},
                        {"x", matrix_object(generic_matrix(chart))},
                        {"eta1", matrix_object(image.eta1)},
                        {"eta2", matrix_object(image.eta2)}};
    return out.dump(2);
}

std::string polynomial_latex(const Polynomial& p) {
    const std::string text = p.to_string();
    std::string out;
    for (std::size_t k = 0; k < text.size();) {
        char ch = text[k];
        if (ch == ' ' || ch == '*') {
            ++k;
        } else if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t end = k;
            while (end < text.size() && (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_')) ++end;
            out += variable_latex(text.substr(k, end - k));
            k = end;
        } else if (ch == '^') {
            std::size_t end = k + 1;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
            out += "^{" + text.substr(k + 1, end - k - 1) + "}";
            k = end;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t end = k;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
            std::string numerator = text.substr(k, end - k);
            if (end < text.size() && text[end] == '/') {
                std::size_t dend = end + 1;
                while (dend < text.size() && std::isdigit(static_cast<unsigned char>(text[dend]))) ++dend;
                out += "\\frac{" + numerator + "}{" + text.substr(end + 1, dend - end - 1) + "}";
                k = dend;
            } else {
                out += numerator;
                k = end;
            }
        } else {
            out += ch;
            ++k;
        }
    }
    return out;
}

std::string matrix_latex(const ChartMatrix& m) {
    std::string out = "\\begin{pmatrix}\n";
    for (std::size_t i = 1; i <= m.n(); ++i) {
        for (std::size_t j = 1; j <= m.n(); ++j) out += (j > 1 ? " & " : "") + polynomial_latex(m(i, j));
        out += i < m.n() ? " \\\\\n" : "\n";
    }
    return out + "\\end{pmatrix}";
}

std::string sweep_latex(const Chart& chart, const SweepImage& image) {
    return "% u = " + chart.u().to_string() + "\n" + "x=" + matrix_latex(generic_matrix(chart)) + "\n\n" +
           "\\eta_1(x)=" + matrix_latex(image.eta1) + "\n\n" + "\\eta_2(x)=" + matrix_latex(image.eta2) + "\n";
}

std::string report_json(const VerificationReport& report) {
    ordered_json failures = ordered_json::array();
    for (const auto& f : report.failures) failures.push_back({{"case", f.case_key}, {"detail", f.detail}});
    ordered_json out = {{"check", report.check},
                        {"range", report.range},
                        {"cases", report.cases},
                        {"passed", report.passed()},
                        {"failures", failures},
                        {"findings", report.findings}};
    return out.dump(2);
}

std::string report_text(const VerificationReport& report) {
    std::ostringstream out;
    out << report.check << " [" << report.range << "]: " << report.cases << " cases, " << report.failures.size()
        << " failures, " << report.findings.size() << " findings";
    out.setf(std::ios::fixed);
    out.precision(2);
    out << " (" << report.wall_time_seconds << " s)\n";
    for (const auto& f : report.failures) out << "  FAIL " << f.case_key << ": " << f.detail << "\n";
    for (const auto& f : report.findings) out << "  note " << f << "\n";
    return out.str();
}

}  // namespace richardson
