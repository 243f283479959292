// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "lattice_rotor/core_map.hpp"

namespace lattice_rotor::cli {

inline constexpr int kFormatVersion = 1;

// Comment lines every CSV starts with, then the column row. Extra key=value
// pairs go on the first line after the fixed ones.
void write_csv_preamble(std::ostream& out, const std::string& command, const std::string& lambda, Int step_cap,
                        const std::vector<std::pair<std::string, std::string>>& extra,
                        const std::vector<std::string>& columns);

// Quotes a field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

class CsvRow {
public:
    explicit CsvRow(std::ostream& out) : out_(out) {}
    ~CsvRow() { out_ << '\n'; }
    CsvRow(const CsvRow&) = delete;
    CsvRow& operator=(const CsvRow&) = delete;

    template <class T>
    CsvRow& operator<<(const T& v) {
        if (!first_) out_ << ',';
        first_ = false;
        write(v);
        return *this;
    }

private:
    void write(const std::string& s) { out_ << csv_field(s); }
    void write(const char* s) { out_ << csv_field(s); }
    void write(bool b) { out_ << (b ? 1 : 0); }
    void write(double d);
    template <class T>
    void write(const T& v) { out_ << v; }

    std::ostream& out_;
    bool first_ = true;
};

// Shortest round-trip decimal form.
std::string format_double(double d);

struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // row-major, row 0 at the top
};

// Binary P5, maxval 255.
void write_pgm(std::ostream& out, const GrayImage& img);

}  // namespace lattice_rotor::cli
