#pragma once

#include <stdexcept>
#include <string>

namespace isorep {

// Base for everything this library throws. The CLI maps any Error to
// exit code 2 (input error); failed certificates are reported, not thrown.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- metric -----------------------------------------------------------

struct NotSymmetric : Error {
    int i, j;
    NotSymmetric(int i_, int j_)
        : Error("matrix not symmetric at (" + std::to_string(i_) + "," +
                std::to_string(j_) + ")"),
          i(i_), j(j_) {}
};

struct NonzeroDiagonal : Error {
    int i;
    explicit NonzeroDiagonal(int i_)
        : Error("nonzero diagonal entry at index " + std::to_string(i_)), i(i_) {}
};

struct ZeroOffDiagonal : Error {
    int i, j;
    ZeroOffDiagonal(int i_, int j_)
        : Error("off-diagonal distance must be positive at (" + std::to_string(i_) +
                "," + std::to_string(j_) + ")"),
          i(i_), j(j_) {}
};

struct TriangleViolation : Error {
    int i, j, k;
    TriangleViolation(int i_, int j_, int k_)
        : Error("triangle inequality violated: d(" + std::to_string(i_) + "," +
                std::to_string(k_) + ") > d(" + std::to_string(i_) + "," +
                std::to_string(j_) + ") + d(" + std::to_string(j_) + "," +
                std::to_string(k_) + ")"),
          i(i_), j(j_), k(k_) {}
};

struct DuplicatePoints : Error {
    int i, j;
    DuplicatePoints(int i_, int j_)
        : Error("points " + std::to_string(i_) + " and " + std::to_string(j_) +
                " coincide"),
          i(i_), j(j_) {}
};

struct ParseError : Error {
    std::string position;
    ParseError(std::string position_, const std::string& what_)
        : Error("parse error at " + position_ + ": " + what_),
          position(std::move(position_)) {}
};

// --- isometry ---------------------------------------------------------

struct MismatchedSpaces : Error {
    MismatchedSpaces() : Error("isometries act on different spaces") {}
};

struct SearchBudgetExceeded : Error {
    int n;
    explicit SearchBudgetExceeded(int n_)
        : Error("space has " + std::to_string(n_) +
                " points, beyond the configured search budget"),
          n(n_) {}
};

struct UnknownElement : Error {
    UnknownElement() : Error("permutation is not an element of this group") {}
};

// --- kernel -----------------------------------------------------------

struct IndexOutOfRange : Error {
    int index;
    explicit IndexOutOfRange(int index_)
        : Error("index " + std::to_string(index_) + " out of range"), index(index_) {}
};

struct MismatchedGroup : Error {
    explicit MismatchedGroup(const std::string& msg) : Error(msg) {}
    MismatchedGroup() : Error("element does not belong to this group") {}
};

struct TableLookupError : Error {
    double distance;
    explicit TableLookupError(double d)
        : Error("table kernel has no entry for distance " + std::to_string(d)),
          distance(d) {}
};

// --- gns --------------------------------------------------------------

struct NotPSD : Error {
    double min_eigenvalue;
    explicit NotPSD(double min_eig)
        : Error("Gram matrix fails the PSD check, min eigenvalue " +
                std::to_string(min_eig)),
          min_eigenvalue(min_eig) {}
};

struct RankDeficientTranslation : Error {
    double error;
    explicit RankDeficientTranslation(double err)
        : Error("left translation does not preserve the quotient space, error " +
                std::to_string(err)),
          error(err) {}
};

struct EmptyList : Error {
    explicit EmptyList(const std::string& what_) : Error(what_) {}
};

// --- faithful ---------------------------------------------------------

struct EmptyBasepoints : Error {
    EmptyBasepoints() : Error("basepoint list is empty") {}
};

struct NoGapCertified : Error {
    double epsilon;
    explicit NoGapCertified(double eps)
        : Error("kernel has no certified sup gap at epsilon " + std::to_string(eps)),
          epsilon(eps) {}
};

}  // namespace isorep
