#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qlie/errors.hpp"

namespace qlie {

/// Finite carrier with a left-conjugation table and an optional
/// right-conjugation table: left[x][y] = x ⊳ y, right[x][y] = x ⊲ y.
struct Magma2 {
    std::size_t size = 0;
    std::vector<std::vector<std::size_t>> left;
    std::optional<std::vector<std::vector<std::size_t>>> right;

    std::size_t lconj(std::size_t x, std::size_t y) const { return left[x][y]; }
    std::size_t rconj(std::size_t x, std::size_t y) const { return (*right)[x][y]; }
    bool has_right() const { return right.has_value(); }

    /// Throws InvalidTable if entries are out of range or rows are ragged.
    void check_wellformed() const;
};

enum class LawStatus { Pass, Fail, NotApplicable };

struct LawResult {
    LawStatus status = LawStatus::Pass;
    std::optional<std::array<std::size_t, 3>> witness;
    bool passed() const { return status == LawStatus::Pass; }
    bool failed() const { return status == LawStatus::Fail; }
};

/// Exhaustive law check. Laws that need the right table are reported
/// NotApplicable when it is absent, never silently true.
struct LawsReport {
    LawResult left_shelf;        // x ⊳ (y ⊳ z) = (x ⊳ y) ⊳ (x ⊳ z)
    LawResult right_shelf;       // (x ⊲ y) ⊲ z = (x ⊲ z) ⊲ (y ⊲ z)
    LawResult right_inverse;     // (x ⊳ y) ⊲ x = y
    LawResult left_inverse;      // x ⊳ (y ⊲ x) = y
    LawResult left_idem;         // x ⊳ x = x
    LawResult right_idem;        // x ⊲ x = x
    LawResult left_quasi_idem;   // (x ⊳ x) ⊳ y = x ⊳ y
    LawResult right_quasi_idem;  // y ⊲ (x ⊲ x) = y ⊲ x
    LawResult mixed_dist_left;   // x ⊳ (y ⊲ z) = (x ⊳ y) ⊲ (x ⊳ z)
    LawResult mixed_dist_right;  // (x ⊳ y) ⊲ z = (x ⊲ z) ⊳ (y ⊲ z)

    bool is_left_shelf() const { return left_shelf.passed(); }
    bool is_spindle() const { return left_shelf.passed() && left_idem.passed(); }
    bool is_rack() const {
        return left_shelf.passed() && right_shelf.passed() && left_inverse.passed() &&
               right_inverse.passed();
    }
    bool is_quandle() const { return is_rack() && left_idem.passed() && right_idem.passed(); }
    bool is_quasi_idempotent_shelf() const {
        return left_shelf.passed() && left_quasi_idem.passed();
    }
};

LawsReport check_laws(const Magma2& Q);

/// Finite group given by its multiplication table; identity and inverses are
/// derived and the group laws verified on construction.
struct GroupTable {
    std::size_t size = 0;
    std::vector<std::vector<std::size_t>> mul;
    std::size_t identity = 0;
    std::vector<std::size_t> inverse;
};

/// Validates associativity, unit and inverses; throws InvalidTable.
GroupTable make_group(std::vector<std::vector<std::size_t>> mul);

GroupTable cyclic_group(std::size_t n);
/// Symmetric group on n letters (n ≤ 5 keeps the table reasonable).
GroupTable symmetric_group(std::size_t n);

/// n-fold conjugation quandle: x ⊳ y = x^n y x^-n, x ⊲ y = y^-n x y^n.
Magma2 conj_quandle(const GroupTable& G, unsigned n = 1);

/// x ⊳ y = (y+1) mod n, y ⊲ x = (y-1) mod n. A rack but not a quandle.
Magma2 cyclic_rack(std::size_t n);

/// a ⊳ b = b ⊲ a = 2a - b on Z_m.
Magma2 reflection_quandle(std::size_t m);

/// If every x ⊳ - is a bijection, returns the rack completion with
/// right[y][x] = (x ⊳ -)^{-1}(y); otherwise nullopt. Requires left_shelf.
std::optional<Magma2> derive_right_from_left(const Magma2& Q);

}  // namespace qlie
