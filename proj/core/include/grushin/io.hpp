#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "grushin/grid.hpp"
#include "grushin/gtransform.hpp"
#include "grushin/types.hpp"

// Plain-text files: `# key=value` header lines, then one CSV record per row.
// Reals are written with 17 significant digits in e-notation.
namespace grushin::io {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// missing or unparsable header field
class HeaderError : public IoError {
public:
    HeaderError(const std::string& path, const std::string& field, const std::string& what);
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

class RowCountError : public IoError {
public:
    RowCountError(const std::string& path, std::size_t expected, std::size_t found);
};

// non-finite or unparsable entry, or a row that breaks the layout
class ValueError : public IoError {
public:
    ValueError(const std::string& path, std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// header parameters outside their range (alpha, beta <= -1, n_max < 1)
class ParameterError : public IoError {
public:
    using IoError::IoError;
};

using Header = std::map<std::string, std::string>;

struct GridFile {
    TypePair tp{0.0, 0.0};
    GridFunction2D grid;
};

std::string format_real(double x);
double parse_real(const std::string& text);  // throws std::invalid_argument

void write_grid(const std::string& path, const GridFile& gf);
GridFile read_grid(const std::string& path);

void write_spectral(const std::string& path, const SpectralData& sd);
SpectralData read_spectral(const std::string& path);

// rows r,s
std::vector<Point> read_points(const std::string& path);
void write_points(const std::string& path, std::span<const Point> points);
// rows r,s,value
void write_point_values(const std::string& path, const Header& header, std::span<const Point> points,
                        std::span<const double> values);

// named columns of equal length
void write_columns(const std::string& path, const Header& header, const std::vector<std::string>& names,
                   const std::vector<std::vector<double>>& columns);

// key=value lines, optionally prefixed by '#'; blank lines and '#' lines without '=' are skipped
Header read_config(const std::string& path);

}  // namespace grushin::io
