#include "mext/duval.hpp"

#include <algorithm>
#include <sstream>

#include "mext/error.hpp"
#include "mext/localring.hpp"
#include "mext/newton.hpp"

namespace mext {

DuValType::DuValType(char fam, int r) : family(fam), rank(r) {
    bool ok = (family == 'A' && rank >= 1) || (family == 'D' && rank >= 4) ||
              (family == 'E' && rank >= 6 && rank <= 8);
    if (!ok)
        throw DomainError("DuValType: invalid type " + std::string(1, fam) + "_" +
                          std::to_string(r));
}

std::string DuValType::str() const {
    return std::string(1, family) + "_" + std::to_string(rank);
}

std::vector<std::pair<int, int>> dynkin_edges(const DuValType& t) {
    std::vector<std::pair<int, int>> e;
    if (t.family == 'A') {
        for (int j = 1; j < t.rank; ++j)
            e.emplace_back(j, j + 1);
    } else if (t.family == 'D') {
        for (int j = 1; j + 1 <= t.rank - 2; ++j)
            e.emplace_back(j, j + 1);
        e.emplace_back(t.rank - 2, t.rank - 1);
        e.emplace_back(t.rank - 2, t.rank);
    } else {
        for (int j = 1; j + 1 <= t.rank - 1; ++j)
            e.emplace_back(j, j + 1);
        e.emplace_back(3, t.rank);
    }
    return e;
}

namespace {

Polynomial var(const char* name) {
    return Polynomial::variable(ctx_xyz(), std::string(name));
}

} // namespace

Polynomial duval_equation(const DuValType& t) {
    Polynomial x = var("x"), y = var("y"), z = var("z");
    switch (t.family) {
        case 'A':
            return x * z - y.pow(static_cast<unsigned>(t.rank + 1));
        case 'D':
            return x * x - z * (y * y + z.pow(static_cast<unsigned>(t.rank - 2)));
        default:
            if (t.rank == 6)
                return x * (x + z * z) - y.pow(3);
            if (t.rank == 7)
                return x * x - y * (y * y + z.pow(3));
            return x * x + y.pow(3) + z.pow(5);
    }
}

std::string format_kind_name(FormatKind k) {
    switch (k) {
        case FormatKind::A: return "A";
        case FormatKind::Dl: return "Dl";
        case FormatKind::Dr: return "Dr";
        case FormatKind::E6: return "E6";
        default: return "E7";
    }
}

FormatSpec::FormatSpec()
    : a(ctx_xyz()), b(ctx_xyz()), c(ctx_xyz()), d(ctx_xyz()) {}

FormatSpec FormatSpec::plain(FormatKind kind, int n, int i, Polynomial a, Polynomial b) {
    FormatSpec s;
    s.kind = kind;
    s.n = n;
    s.i = i;
    s.w = 0;
    s.a = std::move(a);
    s.b = std::move(b);
    s.validate();
    return s;
}

FormatSpec FormatSpec::unproj(FormatKind kind, int n, int i, int w, Polynomial a, Polynomial b,
                              Polynomial c, Polynomial d) {
    FormatSpec s;
    s.kind = kind;
    s.n = n;
    s.i = i;
    s.w = w;
    s.a = std::move(a);
    s.b = std::move(b);
    s.c = std::move(c);
    s.d = std::move(d);
    s.validate();
    return s;
}

DuValType FormatSpec::type() const {
    switch (kind) {
        case FormatKind::A: return DuValType('A', n - 1);
        case FormatKind::Dl:
        case FormatKind::Dr: return DuValType('D', n);
        case FormatKind::E6: return DuValType('E', 6);
        default: return DuValType('E', 7);
    }
}

int FormatSpec::max_width() const {
    switch (kind) {
        case FormatKind::A: return i;
        case FormatKind::Dl: return 2;
        case FormatKind::Dr: return half();
        case FormatKind::E6: return 2;
        default: return 3;
    }
}

namespace {

bool supported_in(const Polynomial& f, std::initializer_list<std::size_t> vars) {
    for (const auto& [m, cc] : f.terms())
        for (std::size_t v = 0; v < 3; ++v)
            if (m.exp(v) && std::find(vars.begin(), vars.end(), v) == vars.end())
                return false;
    return true;
}

} // namespace

void FormatSpec::validate() const {
    switch (kind) {
        case FormatKind::A:
            if (n < 2 || i < 1 || i > n - 1)
                throw InvariantError("FormatSpec A: need n >= 2 and 1 <= i <= n-1");
            if (w >= 1 && n < 2 * i)
                throw InvariantError("FormatSpec A: unprojection form assumes n >= 2i");
            break;
        case FormatKind::Dl:
        case FormatKind::Dr:
            if (n < 4)
                throw InvariantError("FormatSpec D: need n >= 4");
            break;
        default:
            break;
    }
    if (w < 0 || (w >= 1 && w > max_width()))
        throw InvariantError("FormatSpec: width out of range (max " +
                             std::to_string(max_width()) + ")");
    // Coefficient support restrictions.
    const std::size_t X = 0, Y = 1, Z = 2;
    if (w == 0) {
        bool ok_a = kind == FormatKind::A ? supported_in(a, {X, Y}) : supported_in(a, {Y, Z});
        if (!ok_a || !supported_in(b, {Y, Z}))
            throw InvariantError("FormatSpec: coefficient support violation (a, b)");
        if (!c.is_zero() || !d.is_zero())
            throw InvariantError("FormatSpec: c, d unused when w = 0");
    } else if (kind == FormatKind::A) {
        if (!supported_in(a, {X, Y}) || !supported_in(b, {Y}) || !supported_in(c, {Y}) ||
            !supported_in(d, {Y, Z}))
            throw InvariantError("FormatSpec A: need a(x,y), b(y), c(y), d(y,z)");
    }
}

Polynomial FormatSpec::a_eff() const {
    Polynomial x = var("x"), y = var("y"), z = var("z");
    if (w == 0)
        return a;
    switch (kind) {
        case FormatKind::A: return a * x + b * y.pow(static_cast<unsigned>(w));
        case FormatKind::Dl: return a * y.pow(static_cast<unsigned>(w)) + b * z;
        default: return a * y + b * z.pow(static_cast<unsigned>(w));
    }
}

Polynomial FormatSpec::b_eff() const {
    Polynomial y = var("y"), z = var("z");
    if (w == 0)
        return b;
    switch (kind) {
        case FormatKind::A: return c * y.pow(static_cast<unsigned>(w)) + d * z;
        case FormatKind::Dl: return c * y.pow(static_cast<unsigned>(w)) + d * z;
        default: return c * y + d * z.pow(static_cast<unsigned>(w));
    }
}

Polynomial FormatMatrix::det_phi() const {
    return phi[0][0] * phi[1][1] - phi[0][1] * phi[1][0];
}

std::array<Polynomial, 3> FormatMatrix::minors() const {
    return {m[0][0] * m[1][1] - m[0][1] * m[1][0],
            m[0][0] * m[1][2] - m[0][2] * m[1][0],
            m[0][1] * m[1][2] - m[0][2] * m[1][1]};
}

std::vector<Polynomial> FormatMatrix::entries() const {
    std::vector<Polynomial> e;
    for (const auto& row : m)
        for (const auto& f : row)
            e.push_back(f);
    return e;
}

FormatMatrix format_matrix(const FormatSpec& spec) {
    spec.validate();
    Polynomial x = var("x"), y = var("y"), z = var("z");
    auto phi = [&]() -> std::array<std::array<Polynomial, 2>, 2> {
        switch (spec.kind) {
            case FormatKind::A:
                return {{{x, y.pow(static_cast<unsigned>(spec.i))},
                         {y.pow(static_cast<unsigned>(spec.n - spec.i)), z}}};
            case FormatKind::Dl:
                return {{{x, y * y + z.pow(static_cast<unsigned>(spec.n - 2))}, {z, x}}};
            case FormatKind::Dr:
                if (spec.n % 2 == 0)
                    return {{{x, y * z + z.pow(static_cast<unsigned>(spec.half()))}, {y, x}}};
                return {{{x, y * z}, {y, x + z.pow(static_cast<unsigned>(spec.half()))}}};
            case FormatKind::E6:
                return {{{x, y * y}, {y, x + z * z}}};
            default:
                return {{{x, y * y + z.pow(3)}, {y, x}}};
        }
    }();
    std::array<std::array<Polynomial, 3>, 2> m{
        {{phi[0][0], phi[0][1], -spec.b_eff()}, {phi[1][0], phi[1][1], spec.a_eff()}}};
    return FormatMatrix{std::move(phi), std::move(m)};
}

long width(const FormatSpec& spec) {
    Colength c = colength(format_matrix(spec).entries());
    if (!c.stabilized)
        throw DomainError("width: colength did not stabilize (degenerate format)");
    return c.value;
}

NumericalType::NumericalType(DuValType t, std::vector<long> a, Branch br)
    : type(t), alpha(std::move(a)), branch(br) {
    if (alpha.size() != static_cast<std::size_t>(type.rank))
        throw DomainError("NumericalType: coefficient vector length != rank");
    for (long v : alpha)
        if (v < 0)
            throw DomainError("NumericalType: negative coefficient");
}

bool NumericalType::is_zero() const {
    return std::all_of(alpha.begin(), alpha.end(), [](long v) { return v == 0; });
}

long NumericalType::total() const {
    long s = 0;
    for (long v : alpha)
        s += v;
    return s;
}

std::string NumericalType::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        if (!alpha[k])
            continue;
        if (!first)
            os << "+";
        first = false;
        if (alpha[k] != 1)
            os << alpha[k];
        os << "C_" << (k + 1);
    }
    if (first)
        os << "0";
    return os.str();
}

NumericalType NumericalType::mirrored() const {
    std::vector<long> a = alpha;
    int n = type.rank;
    if (type.family == 'A') {
        std::reverse(a.begin(), a.end());
    } else if (type.family == 'D') {
        std::swap(a[static_cast<std::size_t>(n - 2)], a[static_cast<std::size_t>(n - 1)]);
    } else if (type.family == 'E' && n == 6) {
        std::swap(a[0], a[4]);
        std::swap(a[1], a[3]);
    }
    return NumericalType(type, std::move(a), branch);
}

NumericalType NumericalType::canonical() const {
    NumericalType m = mirrored();
    return m.alpha < alpha ? m : *this;
}

NumericalType delta(int n, int i, NumericalType::Branch branch) {
    DuValType t('D', n);
    if (i < 1 || i > n)
        throw DomainError("delta: index out of range");
    std::vector<long> a(static_cast<std::size_t>(n), 0);
    auto br = NumericalType::Branch::none;
    if (i <= n - 2) {
        a[static_cast<std::size_t>(i - 1)] = 1;
    } else if (i == n - 1) {
        a[static_cast<std::size_t>(n - 2)] = 1;
        a[static_cast<std::size_t>(n - 1)] = 1;
    } else {
        br = branch;
        if (branch == NumericalType::Branch::left)
            a[static_cast<std::size_t>(n - 2)] = 2;
        else
            a[static_cast<std::size_t>(n - 1)] = 2;
    }
    return NumericalType(t, std::move(a), br);
}

namespace {

// Rank of a symmetric matrix over the scalar field.
int matrix_rank(std::array<std::array<Scalar, 3>, 3> q) {
    int rank = 0;
    for (std::size_t col = 0, row = 0; col < 3 && row < 3; ++col) {
        std::size_t sel = row;
        while (sel < 3 && q[sel][col].is_zero())
            ++sel;
        if (sel == 3)
            continue;
        std::swap(q[sel], q[row]);
        for (std::size_t r2 = 0; r2 < 3; ++r2) {
            if (r2 == row || q[r2][col].is_zero())
                continue;
            Scalar f = q[r2][col] / q[row][col];
            for (std::size_t k = 0; k < 3; ++k)
                q[r2][k] -= f * q[row][k];
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace

Recognition recognize(const Polynomial& f) {
    if (!f.constant_term().is_zero())
        throw DomainError("recognize: nonzero constant term");
    if (f.context()->size() != 3)
        throw ContextError("recognize: expected a three-variable germ");
    Recognition out;
    if (f.is_zero()) {
        out.reason = "zero germ";
        return out;
    }
    if (!f.homogeneous_part(1).is_zero()) {
        out.reason = "smooth point (nonzero linear part)";
        return out;
    }

    MilnorNumber mn = milnor_number(f);
    if (!mn.isolated) {
        out.reason = "non-isolated singularity";
        return out;
    }
    if (mn.mu < 1) {
        out.reason = "smooth point";
        return out;
    }

    const CtxPtr& ctx = f.context();
    Polynomial q2 = f.homogeneous_part(2);
    std::array<std::array<Scalar, 3>, 3> q{};
    for (const auto& [m, c] : q2.terms()) {
        std::array<std::size_t, 2> idx{};
        std::size_t pos = 0;
        for (std::size_t v = 0; v < 3; ++v)
            for (unsigned e = 0; e < m.exp(v); ++e)
                idx[pos++] = v;
        if (idx[0] == idx[1]) {
            q[idx[0]][idx[0]] += c;
        } else {
            Scalar half = c / Scalar(2);
            q[idx[0]][idx[1]] += half;
            q[idx[1]][idx[0]] += half;
        }
    }
    int corank = 3 - matrix_rank(q);

    if (corank <= 1) {
        out.du_val = true;
        out.type = DuValType('A', static_cast<int>(mn.mu));
        return out;
    }
    if (corank == 3) {
        out.reason = "corank 3 (zero quadratic part)";
        return out;
    }

    // corank 2: move the rank-one direction onto the first variable.
    std::size_t main_var = 3;
    for (std::size_t v = 0; v < 3 && main_var == 3; ++v)
        if (!q[v][v].is_zero())
            main_var = v;
    if (main_var == 3) {
        out.reason = "degenerate rank-1 quadratic form";  // defensive; unreachable over a field
        return out;
    }
    // Kernel basis of q (two independent solutions of q v = 0).
    std::vector<std::array<Scalar, 3>> kernel;
    // q has rank 1, so the kernel is cut out by the single equation
    // sum_k q[main_var][k] v_k = 0.
    for (std::size_t free1 = 0; free1 < 3; ++free1) {
        if (free1 == main_var)
            continue;
        std::array<Scalar, 3> v{Scalar(0), Scalar(0), Scalar(0)};
        v[free1] = Scalar(1);
        v[main_var] = -(q[main_var][free1] / q[main_var][main_var]);
        kernel.push_back(v);
    }

    std::vector<Polynomial> images(3, Polynomial(ctx));
    // columns: X -> e_{main_var}, Y -> kernel[0], Z -> kernel[1]
    for (std::size_t row = 0; row < 3; ++row) {
        Polynomial img(ctx);
        if (row == main_var)
            img += Polynomial::variable(ctx, std::size_t(0));
        img += Polynomial::variable(ctx, std::size_t(1)).scaled(kernel[0][row]);
        img += Polynomial::variable(ctx, std::size_t(2)).scaled(kernel[1][row]);
        images[row] = img;
    }
    Polynomial f1 = RingMap(ctx, images).apply(f);

    // Residual binary cubic in the last two variables.
    Polynomial cubic = f1.homogeneous_part(3);
    CtxPtr ctx2 = make_context({"u", "v"});
    Polynomial r3(ctx2);
    for (const auto& [m, c] : cubic.terms()) {
        if (m.exp(0))
            continue;
        r3.add_term(Monomial({m.exp(1), m.exp(2)}), c);
    }

    bool is_e;
    if (r3.is_zero()) {
        is_e = true;
    } else {
        std::vector<int> pattern = binary_root_structure(r3);
        if (pattern.size() == 1 && pattern[0] == 3)
            is_e = true;
        else
            is_e = false;
    }
    if (is_e) {
        if (mn.mu < 6 || mn.mu > 8) {
            out.reason = "cubic is a perfect cube but Milnor number is not 6, 7 or 8";
            return out;
        }
        out.du_val = true;
        out.type = DuValType('E', static_cast<int>(mn.mu));
        return out;
    }
    if (mn.mu < 4) {
        out.reason = "D-type cubic with Milnor number < 4";
        return out;
    }
    out.du_val = true;
    out.type = DuValType('D', static_cast<int>(mn.mu));
    return out;
}

} // namespace mext
