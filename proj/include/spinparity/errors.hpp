#pragma once

#include <stdexcept>
#include <string>

namespace spinparity {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    /// Stable machine-readable error name (used for error-marked sweep rows).
    virtual const char* kind() const noexcept { return "Error"; }
};

/// Error carrying the measured magnitude of a violated numeric precondition.
class ViolationError : public Error {
public:
    ViolationError(const std::string& msg, double violation)
        : Error(msg + " (violation = " + std::to_string(violation) + ")"),
          violation_(violation) {}
    double violation() const noexcept { return violation_; }

private:
    double violation_;
};

// linalg kernel
class NonHermitianInput : public ViolationError {
public:
    explicit NonHermitianInput(double v) : ViolationError("matrix is not Hermitian", v) {}
    const char* kind() const noexcept override { return "NonHermitianInput"; }
};
class NonSymmetricInput : public ViolationError {
public:
    explicit NonSymmetricInput(double v) : ViolationError("matrix is not symmetric", v) {}
    const char* kind() const noexcept override { return "NonSymmetricInput"; }
};
class ConvergenceFailure : public Error {
public:
    explicit ConvergenceFailure(double off)
        : Error("Jacobi sweep limit reached, off-diagonal norm = " + std::to_string(off)) {}
    const char* kind() const noexcept override { return "ConvergenceFailure"; }
};

// density-matrix validation
class NotHermitian : public ViolationError {
public:
    explicit NotHermitian(double v) : ViolationError("state is not Hermitian", v) {}
    const char* kind() const noexcept override { return "NotHermitian"; }
};
class TraceNotOne : public ViolationError {
public:
    explicit TraceNotOne(double v) : ViolationError("state trace differs from one", v) {}
    const char* kind() const noexcept override { return "TraceNotOne"; }
};
class NotPositive : public ViolationError {
public:
    explicit NotPositive(double v) : ViolationError("state has a negative eigenvalue", v) {}
    const char* kind() const noexcept override { return "NotPositive"; }
};
class NonRealExpectation : public ViolationError {
public:
    explicit NonRealExpectation(double v)
        : ViolationError("Pauli expectation has a non-real part", v) {}
    const char* kind() const noexcept override { return "NonRealExpectation"; }
};

// physical-model construction
class ZeroMomentum : public Error {
public:
    ZeroMomentum() : Error("helicity is undefined at zero momentum") {}
    const char* kind() const noexcept override { return "ZeroMomentum"; }
};
class DegenerateSpectrum : public Error {
public:
    explicit DegenerateSpectrum(double c2)
        : Error("degenerate spectrum, c2 = " + std::to_string(c2)) {}
    const char* kind() const noexcept override { return "DegenerateSpectrum"; }
};
class NormalizationFailure : public Error {
public:
    explicit NormalizationFailure(double tr)
        : Error("projector trace too small to normalize: " + std::to_string(tr)) {}
    const char* kind() const noexcept override { return "NormalizationFailure"; }
};
class AlreadyElectric : public Error {
public:
    AlreadyElectric() : Error("field substitution applied to electric-field parameters") {}
    const char* kind() const noexcept override { return "AlreadyElectric"; }
};

// sweep front end
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& field, const std::string& why)
        : Error("config field '" + field + "': " + why), field_(field) {}
    const std::string& field() const noexcept { return field_; }
    const char* kind() const noexcept override { return "ConfigError"; }

private:
    std::string field_;
};
class EmptyTable : public Error {
public:
    EmptyTable() : Error("chart needs at least two data rows") {}
    const char* kind() const noexcept override { return "EmptyTable"; }
};
class SnapshotMissing : public Error {
public:
    explicit SnapshotMissing(const std::string& path)
        : Error("snapshot file missing: " + path + " (run with --bless to create)") {}
    const char* kind() const noexcept override { return "SnapshotMissing"; }
};
class SnapshotMismatch : public Error {
public:
    SnapshotMismatch(const std::string& path, std::size_t row, std::size_t col,
                     const std::string& detail)
        : Error("snapshot " + path + " diverges at row " + std::to_string(row) + ", column " +
                std::to_string(col) + ": " + detail),
          row_(row), col_(col) {}
    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }
    const char* kind() const noexcept override { return "SnapshotMismatch"; }

private:
    std::size_t row_;
    std::size_t col_;
};

}  // namespace spinparity
