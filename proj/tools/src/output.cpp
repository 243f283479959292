// SPDX-License-Identifier: MIT
#include "lattice_rotor_cli/output.hpp"

#include <charconv>
#include <cmath>

namespace lattice_rotor::cli {

void write_csv_preamble(std::ostream& out, const std::string& command, const std::string& lambda, Int step_cap,
                        const std::vector<std::pair<std::string, std::string>>& extra,
                        const std::vector<std::string>& columns) {
    out << "# lattice-rotor " << command << " format=" << kFormatVersion << " lambda=" << lambda
        << " step_cap=" << step_cap;
    for (const auto& [k, v] : extra) out << ' ' << k << '=' << v;
    out << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_field(columns[i]);
    out << '\n';
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

std::string format_double(double d) {
    if (std::isnan(d)) return "nan";
    if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, d);
    return std::string(buf, res.ptr);
}

void CsvRow::write(double d) { out_ << format_double(d); }

void write_pgm(std::ostream& out, const GrayImage& img) {
    out << "P5\n" << img.width << ' ' << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()));
}

}  // namespace lattice_rotor::cli
