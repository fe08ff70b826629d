#ifndef MEXT_DUVAL_HPP
#define MEXT_DUVAL_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mext/poly.hpp"

namespace mext {

// ADE type with the Dynkin numbering: A_n a chain 1..n; D_n a chain
// 1..n-2 with n-1 and n attached to n-2; E_n a chain 1..n-1 with n
// attached to 3.
struct DuValType {
    char family = 'A';  // 'A' | 'D' | 'E'
    int rank = 1;

    DuValType() = default;
    DuValType(char fam, int r);

    bool operator==(const DuValType& o) const {
        return family == o.family && rank == o.rank;
    }
    bool operator!=(const DuValType& o) const { return !(*this == o); }

    std::string str() const;  // e.g. "A_3"
};

// Standard ADE Dynkin adjacency on nodes 1..rank.
std::vector<std::pair<int, int>> dynkin_edges(const DuValType& t);

// Normal-form equation of the Du Val singularity:
//   A_n : xz - y^{n+1}      D_n : x^2 - z(y^2 + z^{n-2})
//   E_6 : x(x + z^2) - y^3  E_7 : x^2 - y(y^2 + z^3)  E_8 : x^2 + y^3 + z^5
Polynomial duval_equation(const DuValType& t);

enum class FormatKind { A, Dl, Dr, E6, E7 };

std::string format_kind_name(FormatKind k);

// A curve germ written as the 2x2 minors of the 2x3 matrix
// (phi | (-b_eff, a_eff)^T).  With w == 0 the third column is the plain
// (-b, a); with w >= 1 the coefficients combine into the structured
// third column of the codimension-3 normal forms (e.g. for the A format
// b_eff = c y^w + d z and a_eff = a x + b y^w).
struct FormatSpec {
    FormatKind kind = FormatKind::A;
    int n = 0;  // A: index of A_{n-1}; Dl/Dr: Dynkin rank
    int i = 0;  // A only
    int w = 0;  // 0: plain column; >= 1: unprojection width parameter
    Polynomial a, b, c, d;

    FormatSpec();

    static FormatSpec plain(FormatKind kind, int n, int i, Polynomial a, Polynomial b);
    static FormatSpec unproj(FormatKind kind, int n, int i, int w, Polynomial a, Polynomial b,
                             Polynomial c, Polynomial d);

    DuValType type() const;
    // Dr: the k with n = 2k or n = 2k + 1.
    int half() const { return n / 2; }
    int max_width() const;

    void validate() const;

    // Effective third-column entries.
    Polynomial a_eff() const;
    Polynomial b_eff() const;
};

struct FormatMatrix {
    std::array<std::array<Polynomial, 2>, 2> phi;
    std::array<std::array<Polynomial, 3>, 2> m;  // (phi | (-b_eff, a_eff)^T)

    Polynomial det_phi() const;
    // Minors m12, m13, m23 of the 2x3 matrix (m12 = det phi).
    std::array<Polynomial, 3> minors() const;
    std::vector<Polynomial> entries() const;
};

FormatMatrix format_matrix(const FormatSpec& spec);

// A curve germ: either a local complete intersection V(f, g) with
// S_X = V(f), or a matrix format.
struct LciSpec {
    Polynomial f, g;
};

struct CurveSpec {
    std::variant<LciSpec, FormatSpec> value;

    CurveSpec(LciSpec s) : value(std::move(s)) {}          // NOLINT
    CurveSpec(FormatSpec s) : value(std::move(s)) {}        // NOLINT

    bool is_lci() const { return std::holds_alternative<LciSpec>(value); }
    const LciSpec& lci() const { return std::get<LciSpec>(value); }
    const FormatSpec& format() const { return std::get<FormatSpec>(value); }
};

// Numerical type sum alpha_i C_i over the Dynkin nodes of `type`.
struct NumericalType {
    DuValType type;
    std::vector<long> alpha;  // size == type.rank, index j-1 <-> C_j
    enum class Branch { none, left, right };
    Branch branch = Branch::none;  // D_n Delta_n bookkeeping

    NumericalType() = default;
    NumericalType(DuValType t, std::vector<long> a, Branch br = Branch::none);

    bool is_zero() const;
    long total() const;
    std::string str() const;  // e.g. "C_2+2C_5"

    bool operator==(const NumericalType& o) const {
        return type == o.type && alpha == o.alpha;
    }
    // Image under the Dynkin diagram automorphism (A: j <-> n+1-j,
    // D: swap fork nodes, E6: the order-2 symmetry; identity otherwise).
    NumericalType mirrored() const;
    // Lexicographically smaller of *this and mirrored().
    NumericalType canonical() const;
};

// The D_n cycle Delta_i: C_i for i <= n-2, C_{n-1}+C_n for i = n-1,
// 2C_{n-1} (left) or 2C_n (right) for i = n.
NumericalType delta(int n, int i, NumericalType::Branch branch = NumericalType::Branch::right);

struct Recognition {
    bool du_val = false;
    DuValType type;
    std::string reason;  // for "not Du Val"
};

// ADE recognizer for a hypersurface germ in three variables: Milnor
// number plus corank, with a degree-3 splitting reduction and the root
// pattern of the residual binary cubic separating D from E.
Recognition recognize(const Polynomial& f);

} // namespace mext

#endif
