#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace grushin {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class GridError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Type parameter, nu > -1.
class Order {
public:
    Order(double nu);  // NOLINT(google-explicit-constructor)
    double value() const { return nu_; }
    operator double() const { return nu_; }  // NOLINT

private:
    double nu_;
};

struct TypePair {
    Order alpha;
    Order beta;
};

struct LaguerreIndex {
    LaguerreIndex(int n, double alpha, double tau);
    int n;
    double alpha;
    double tau;
    double lambda() const { return 2.0 * (2.0 * n + alpha + 1.0); }
};

// Dense row-major matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

struct Interval {
    double lo;
    double hi;
};

struct Box {
    Interval r;
    Interval s;
};

}  // namespace grushin

namespace grushin {

struct Point {
    double r;
    double s;
};

}  // namespace grushin
