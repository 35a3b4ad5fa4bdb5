#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "depthlab/bigint.hpp"
#include "depthlab/errors.hpp"
#include "depthlab/perm_group.hpp"

namespace depthlab {

inline constexpr std::size_t group_algebra_order_limit = 2048;

/// The extension of rational group algebras Q[G] over Q[H], with a fixed left
/// transversal c_1 = 1, ..., c_n of H in G. Multiplication is tabulated.
///
/// Q[G] is free as a right Q[H]-module on the c_j, so every element of
/// Q[G] ⊗_H Q[G] has a unique expression sum c_j ⊗ a_j. That is the
/// canonical form used by TensorElement2 (and by TensorElement3 one level
/// deeper).
class GroupAlgebraExtension {
public:
    using index = std::uint32_t;

    GroupAlgebraExtension(PermGroup g, PermGroup h) : g_(std::move(g)), h_(std::move(h))
    {
        require_subgroup(g_, h_);
        const std::size_t n = g_.small_order();
        if (n > group_algebra_order_limit)
            throw resource_error("group algebra computations are limited to order " +
                                 std::to_string(group_algebra_order_limit));
        const auto& elems = g_.elements();
        mul_.resize(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                mul_[a * n + b] = static_cast<index>(g_.index_of_member(elems[a] * elems[b]));
        inv_.resize(n);
        for (std::size_t a = 0; a < n; ++a)
            inv_[a] = static_cast<index>(g_.index_of_member(elems[a].inverse()));
        in_sub_.assign(n, false);
        for (const auto& x : h_.elements())
            in_sub_[g_.index_of_member(x)] = true;

        for (const auto& t : left_transversal(g_, h_))
            transversal_.push_back(static_cast<index>(g_.index_of_member(t)));
        coset_.resize(n);
        sub_part_.resize(n);
        for (std::size_t j = 0; j < transversal_.size(); ++j) {
            index t_inv = inv_[transversal_[j]];
            for (std::size_t x = 0; x < n; ++x) {
                index h = mul(t_inv, static_cast<index>(x));
                if (in_sub_[h]) {
                    coset_[x] = static_cast<index>(j);
                    sub_part_[x] = h;
                }
            }
        }
    }

    const PermGroup& group() const noexcept { return g_; }
    const PermGroup& subgroup() const noexcept { return h_; }
    std::size_t order() const noexcept { return inv_.size(); }
    std::size_t index_count() const noexcept { return transversal_.size(); }

    index mul(index a, index b) const { return mul_[static_cast<std::size_t>(a) * inv_.size() + b]; }
    index inv(index a) const { return inv_[a]; }
    bool in_subgroup(index a) const { return in_sub_[a]; }
    index identity() const { return 0; } // elements are sorted; the identity is first

    /// Transversal element c_j.
    index transversal(std::size_t j) const { return transversal_.at(j); }
    /// x = c_j h with j = coset(x), h = sub_part(x).
    index coset(index x) const { return coset_[x]; }
    index sub_part(index x) const { return sub_part_[x]; }

    index element_index(const Permutation& p) const
    {
        auto idx = g_.index_of(p);
        if (!idx)
            throw input_error("permutation " + p.to_cycles() + " is not in the group");
        return static_cast<index>(*idx);
    }
    const Permutation& element(index i) const { return g_.elements()[i]; }

private:
    PermGroup g_;
    PermGroup h_;
    std::vector<index> mul_;
    std::vector<index> inv_;
    std::vector<bool> in_sub_;
    std::vector<index> transversal_;
    std::vector<index> coset_;
    std::vector<index> sub_part_;
};

using ExtensionPtr = std::shared_ptr<const GroupAlgebraExtension>;

inline ExtensionPtr make_extension(const PermGroup& g, const PermGroup& h)
{
    return std::make_shared<const GroupAlgebraExtension>(g, h);
}

/// Finitely supported rational combination of group elements.
class GroupAlgebraElement {
public:
    using index = GroupAlgebraExtension::index;

    explicit GroupAlgebraElement(ExtensionPtr ext) : ext_(std::move(ext)) {}

    static GroupAlgebraElement basis(ExtensionPtr ext, index g, Rational c = 1)
    {
        GroupAlgebraElement a(std::move(ext));
        a.add_term(g, c);
        return a;
    }

    static GroupAlgebraElement basis(ExtensionPtr ext, const Permutation& p, Rational c = 1)
    {
        index g = ext->element_index(p);
        return basis(std::move(ext), g, std::move(c));
    }

    const ExtensionPtr& extension() const noexcept { return ext_; }
    const std::map<index, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(index g, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.emplace(g, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b)
    {
        for (const auto& [g, c] : b.terms_)
            a.add_term(g, c);
        return a;
    }

    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b)
    {
        for (const auto& [g, c] : b.terms_)
            a.add_term(g, -c);
        return a;
    }

    friend GroupAlgebraElement operator*(const Rational& s, GroupAlgebraElement a)
    {
        if (s == 0)
            a.terms_.clear();
        for (auto& [g, c] : a.terms_)
            c *= s;
        return a;
    }

    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b)
    {
        GroupAlgebraElement r(a.ext_);
        for (const auto& [x, c] : a.terms_)
            for (const auto& [y, d] : b.terms_)
                r.add_term(a.ext_->mul(x, y), c * d);
        return r;
    }

    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b)
    {
        return a.terms_ == b.terms_;
    }

private:
    ExtensionPtr ext_;
    std::map<index, Rational> terms_;
};

/// The bimodule projection F: Q[G] -> Q[H], keeping the coefficients on H.
inline GroupAlgebraElement frobenius_hom(const GroupAlgebraElement& a)
{
    GroupAlgebraElement r(a.extension());
    for (const auto& [g, c] : a.terms())
        if (a.extension()->in_subgroup(g))
            r.add_term(g, c);
    return r;
}

/// Element of Q[G] ⊗_H Q[G] in canonical form: key (j, g) stands for c_j ⊗ g.
class TensorElement2 {
public:
    using index = GroupAlgebraExtension::index;
    using key_type = std::pair<std::size_t, index>;

    explicit TensorElement2(ExtensionPtr ext) : ext_(std::move(ext)) {}

    /// Normal form of x ⊗ y: with x = c_j h, x ⊗ y = c_j ⊗ h y.
    static TensorElement2 simple(ExtensionPtr ext, index x, index y, const Rational& c = 1)
    {
        TensorElement2 t(ext);
        t.add_simple(x, y, c);
        return t;
    }

    static TensorElement2 tensor(const GroupAlgebraElement& x, const GroupAlgebraElement& y)
    {
        TensorElement2 t(x.extension());
        for (const auto& [a, c] : x.terms())
            for (const auto& [b, d] : y.terms())
                t.add_simple(a, b, c * d);
        return t;
    }

    void add_simple(index x, index y, const Rational& c)
    {
        add_canonical({ext_->coset(x), ext_->mul(ext_->sub_part(x), y)}, c);
    }

    void add_canonical(key_type key, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    const ExtensionPtr& extension() const noexcept { return ext_; }
    const std::map<key_type, Rational>& terms() const noexcept { return terms_; }

    /// a · (x ⊗ y) = (a x) ⊗ y
    TensorElement2 left_multiplied(const GroupAlgebraElement& a) const
    {
        TensorElement2 r(ext_);
        for (const auto& [key, c] : terms_)
            for (const auto& [g, d] : a.terms())
                r.add_simple(ext_->mul(g, ext_->transversal(key.first)), key.second, c * d);
        return r;
    }

    /// (x ⊗ y) · a = x ⊗ (y a)
    TensorElement2 right_multiplied(const GroupAlgebraElement& a) const
    {
        TensorElement2 r(ext_);
        for (const auto& [key, c] : terms_)
            for (const auto& [g, d] : a.terms())
                r.add_canonical({key.first, ext_->mul(key.second, g)}, c * d);
        return r;
    }

    /// Multiplication map x ⊗ y -> x y.
    GroupAlgebraElement multiplied() const
    {
        GroupAlgebraElement r(ext_);
        for (const auto& [key, c] : terms_)
            r.add_term(ext_->mul(ext_->transversal(key.first), key.second), c);
        return r;
    }

    friend TensorElement2 operator+(TensorElement2 a, const TensorElement2& b)
    {
        for (const auto& [key, c] : b.terms_)
            a.add_canonical(key, c);
        return a;
    }

    friend TensorElement2 operator*(const Rational& s, TensorElement2 a)
    {
        if (s == 0)
            a.terms_.clear();
        for (auto& [key, c] : a.terms_)
            c *= s;
        return a;
    }

    friend bool operator==(const TensorElement2& a, const TensorElement2& b) { return a.terms_ == b.terms_; }

private:
    ExtensionPtr ext_;
    std::map<key_type, Rational> terms_;
};

/// Element of Q[G] ⊗_H Q[G] ⊗_H Q[G]; key (j, k, g) stands for c_j ⊗ c_k ⊗ g.
class TensorElement3 {
public:
    using index = GroupAlgebraExtension::index;
    using key_type = std::tuple<std::size_t, std::size_t, index>;

    explicit TensorElement3(ExtensionPtr ext) : ext_(std::move(ext)) {}

    void add_simple(index x, index y, index z, const Rational& c)
    {
        const auto& e = *ext_;
        index hy = e.mul(e.sub_part(x), y);
        add_canonical({e.coset(x), e.coset(hy), e.mul(e.sub_part(hy), z)}, c);
    }

    void add_canonical(const key_type& key, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    const ExtensionPtr& extension() const noexcept { return ext_; }
    const std::map<key_type, Rational>& terms() const noexcept { return terms_; }

    TensorElement3 left_multiplied(index a) const
    {
        TensorElement3 r(ext_);
        for (const auto& [key, c] : terms_) {
            const auto& [j, k, g] = key;
            r.add_simple(ext_->mul(a, ext_->transversal(j)), ext_->transversal(k), g, c);
        }
        return r;
    }

    TensorElement3 right_multiplied(index a) const
    {
        TensorElement3 r(ext_);
        for (const auto& [key, c] : terms_) {
            const auto& [j, k, g] = key;
            r.add_canonical({j, k, ext_->mul(g, a)}, c);
        }
        return r;
    }

    friend bool operator==(const TensorElement3& a, const TensorElement3& b) { return a.terms_ == b.terms_; }

private:
    ExtensionPtr ext_;
    std::map<key_type, Rational> terms_;
};

/// Outcome of an exhaustive identity check.
struct VerificationResult {
    bool passed = true;
    std::string failed_check; ///< empty when passed
    std::optional<std::pair<Permutation, Permutation>> counterexample;

    static VerificationResult failure(std::string check, Permutation a, Permutation b)
    {
        VerificationResult r;
        r.passed = false;
        r.failed_check = std::move(check);
        r.counterexample = std::make_pair(std::move(a), std::move(b));
        return r;
    }
};

/// Checks the Frobenius system with dual bases x_i = c_i, y_i = c_i^-1:
/// sum F(a x_i) y_i = a and sum x_i F(y_i a) = a for every group element a.
inline VerificationResult check_frobenius_system(const PermGroup& g, const PermGroup& h)
{
    const ExtensionPtr ext = make_extension(g, h);
    using E = GroupAlgebraElement;
    std::vector<E> xs, ys;
    for (std::size_t i = 0; i < ext->index_count(); ++i) {
        xs.push_back(E::basis(ext, ext->transversal(i)));
        ys.push_back(E::basis(ext, ext->inv(ext->transversal(i))));
    }
    for (std::size_t a = 0; a < ext->order(); ++a) {
        E elem = E::basis(ext, static_cast<E::index>(a));
        E left(ext), right(ext);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            left = left + frobenius_hom(elem * xs[i]) * ys[i];
            right = right + xs[i] * frobenius_hom(ys[i] * elem);
        }
        if (!(left == elem))
            return VerificationResult::failure("sum F(a x_i) y_i = a", ext->element(static_cast<E::index>(a)),
                                               g.identity());
        if (!(right == elem))
            return VerificationResult::failure("sum x_i F(y_i a) = a", ext->element(static_cast<E::index>(a)),
                                               g.identity());
    }
    return {};
}

struct SeparabilityReport {
    TensorElement2 element;
    bool central = false;       ///< a e = e a for every group element a
    bool multiplies_to_one = false;
};

/// e = (1/[G:H]) sum c_i ⊗ c_i^-1, with both defining identities checked.
inline SeparabilityReport separability_element(const PermGroup& g, const PermGroup& h)
{
    const ExtensionPtr ext = make_extension(g, h);
    const Rational scale(1, static_cast<long long>(ext->index_count()));
    TensorElement2 e(ext);
    for (std::size_t i = 0; i < ext->index_count(); ++i)
        e.add_simple(ext->transversal(i), ext->inv(ext->transversal(i)), scale);

    SeparabilityReport report{e, true, false};
    for (std::size_t a = 0; a < ext->order() && report.central; ++a) {
        auto elem = GroupAlgebraElement::basis(ext, static_cast<GroupAlgebraElement::index>(a));
        report.central = e.left_multiplied(elem) == e.right_multiplied(elem);
    }
    report.multiplies_to_one = e.multiplied() == GroupAlgebraElement::basis(ext, ext->identity());
    return report;
}

/// Right D2 quasi-bases for N in G: u_i = c_i ⊗ c_i^-1 and
/// gamma_i(a) = F(a c_i) c_i^-1. Checks x ⊗ y = sum x gamma_i(y) u_i for all
/// group elements x, y, that each u_i commutes with N, and that each gamma_i
/// is an N-N-bimodule map. Non-normal N fails the last two.
inline VerificationResult verify_d2_quasibases(const PermGroup& g, const PermGroup& n)
{
    const ExtensionPtr ext = make_extension(g, n);
    using E = GroupAlgebraElement;
    const std::size_t count = ext->index_count();
    std::vector<TensorElement2> u;
    std::vector<E> c, c_inv;
    for (std::size_t i = 0; i < count; ++i) {
        c.push_back(E::basis(ext, ext->transversal(i)));
        c_inv.push_back(E::basis(ext, ext->inv(ext->transversal(i))));
        u.push_back(TensorElement2::simple(ext, ext->transversal(i), ext->inv(ext->transversal(i))));
    }
    auto gamma = [&](std::size_t i, const E& a) { return frobenius_hom(a * c[i]) * c_inv[i]; };

    for (std::size_t x = 0; x < ext->order(); ++x) {
        E ex = E::basis(ext, static_cast<E::index>(x));
        for (std::size_t y = 0; y < ext->order(); ++y) {
            E ey = E::basis(ext, static_cast<E::index>(y));
            TensorElement2 rhs(ext);
            for (std::size_t i = 0; i < count; ++i)
                rhs = rhs + u[i].left_multiplied(ex * gamma(i, ey));
            if (!(rhs == TensorElement2::tensor(ex, ey)))
                return VerificationResult::failure("x ⊗ y = sum x gamma_i(y) u_i",
                                                   ext->element(static_cast<E::index>(x)),
                                                   ext->element(static_cast<E::index>(y)));
        }
    }

    std::vector<E::index> sub;
    for (std::size_t b = 0; b < ext->order(); ++b)
        if (ext->in_subgroup(static_cast<E::index>(b)))
            sub.push_back(static_cast<E::index>(b));

    for (std::size_t i = 0; i < count; ++i)
        for (E::index b : sub) {
            E eb = E::basis(ext, b);
            if (!(u[i].left_multiplied(eb) == u[i].right_multiplied(eb)))
                return VerificationResult::failure("u_i commutes with the subalgebra", ext->element(b),
                                                   ext->element(ext->transversal(i)));
        }

    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t a = 0; a < ext->order(); ++a) {
            E ea = E::basis(ext, static_cast<E::index>(a));
            E ga = gamma(i, ea);
            for (E::index b : sub)
                for (E::index b2 : sub) {
                    E eb = E::basis(ext, b), eb2 = E::basis(ext, b2);
                    if (!(gamma(i, eb * ea * eb2) == eb * ga * eb2))
                        return VerificationResult::failure("gamma_i is a bimodule map",
                                                           ext->element(static_cast<E::index>(a)),
                                                           ext->element(ext->transversal(i)));
                }
        }
    return {};
}

/// D3 quasi-bases built from left D2 quasi-bases of a normal subgroup N.
///
/// Left D2 data: t_i = c_i ⊗ c_i^-1 and beta_i(a) = c_i F(c_i^-1 a), with
/// u_i = sum_k beta_i(x_k) ⊗ y_k realizing beta_i as u_i^1 F(u_i^2 -). Then
///   T_i = sum_j t_i^1 ⊗ t_i^2 x_j ⊗ y_j,  U_i = sum_j x_j ⊗ y_j u_i^1 ⊗ u_i^2
/// must be N-central and satisfy
///   x ⊗ y = sum_i T_i^1 ⊗ T_i^2 F(T_i^3 U_i^1 F(U_i^2 F(U_i^3 x) y)).
/// Group algebras are free over subgroup algebras, which supplies the
/// generator condition the identity needs.
inline VerificationResult verify_d3_from_d2(const PermGroup& g, const PermGroup& n)
{
    const ExtensionPtr ext = make_extension(g, n);
    const auto& e = *ext;
    using E = GroupAlgebraElement;
    using index = E::index;
    const std::size_t count = e.index_count();

    std::vector<E> xs, ys;
    for (std::size_t j = 0; j < count; ++j) {
        xs.push_back(E::basis(ext, e.transversal(j)));
        ys.push_back(E::basis(ext, e.inv(e.transversal(j))));
    }
    auto beta = [&](std::size_t i, const E& a) { return xs[i] * frobenius_hom(ys[i] * a); };

    std::vector<TensorElement2> t, u;
    for (std::size_t i = 0; i < count; ++i) {
        t.push_back(TensorElement2::tensor(xs[i], ys[i]));
        TensorElement2 ui(ext);
        for (std::size_t k = 0; k < count; ++k)
            ui = ui + TensorElement2::tensor(beta(i, xs[k]), ys[k]);
        u.push_back(std::move(ui));
    }

    // the left D2 identity x ⊗ y = sum t_i beta_i(x) y
    for (std::size_t x = 0; x < e.order(); ++x) {
        E ex = E::basis(ext, static_cast<index>(x));
        for (std::size_t y = 0; y < e.order(); ++y) {
            E ey = E::basis(ext, static_cast<index>(y));
            TensorElement2 rhs(ext);
            for (std::size_t i = 0; i < count; ++i)
                rhs = rhs + t[i].right_multiplied(beta(i, ex) * ey);
            if (!(rhs == TensorElement2::tensor(ex, ey)))
                return VerificationResult::failure("x ⊗ y = sum t_i beta_i(x) y", e.element(static_cast<index>(x)),
                                                   e.element(static_cast<index>(y)));
        }
    }

    std::vector<TensorElement3> big_t, big_u;
    for (std::size_t i = 0; i < count; ++i) {
        TensorElement3 ti(ext), ui(ext);
        for (std::size_t j = 0; j < count; ++j) {
            index xj = e.transversal(j);
            index yj = e.inv(xj);
            for (const auto& [key, c] : t[i].terms())
                ti.add_simple(e.transversal(key.first), e.mul(key.second, xj), yj, c);
            for (const auto& [key, c] : u[i].terms())
                ui.add_simple(xj, e.mul(yj, e.transversal(key.first)), key.second, c);
        }
        big_t.push_back(std::move(ti));
        big_u.push_back(std::move(ui));
    }

    std::vector<index> sub;
    for (std::size_t b = 0; b < e.order(); ++b)
        if (e.in_subgroup(static_cast<index>(b)))
            sub.push_back(static_cast<index>(b));
    for (std::size_t i = 0; i < count; ++i)
        for (index b : sub) {
            if (!(big_t[i].left_multiplied(b) == big_t[i].right_multiplied(b)))
                return VerificationResult::failure("T_i commutes with the subalgebra", e.element(b),
                                                   e.element(e.transversal(i)));
            if (!(big_u[i].left_multiplied(b) == big_u[i].right_multiplied(b)))
                return VerificationResult::failure("U_i commutes with the subalgebra", e.element(b),
                                                   e.element(e.transversal(i)));
        }

    // F on a group element: itself if it lies in N, zero otherwise
    auto f = [&](index a) -> std::optional<index> {
        if (e.in_subgroup(a))
            return a;
        return std::nullopt;
    };
    for (std::size_t x = 0; x < e.order(); ++x) {
        for (std::size_t y = 0; y < e.order(); ++y) {
            TensorElement2 rhs(ext);
            for (std::size_t i = 0; i < count; ++i)
                for (const auto& [tk, tc] : big_t[i].terms()) {
                    const auto& [t1, t2, t3] = tk;
                    for (const auto& [uk, uc] : big_u[i].terms()) {
                        const auto& [u1, u2, u3] = uk;
                        auto inner = f(e.mul(u3, static_cast<index>(x)));
                        if (!inner)
                            continue;
                        auto middle = f(e.mul(e.mul(e.transversal(u2), *inner), static_cast<index>(y)));
                        if (!middle)
                            continue;
                        auto outer = f(e.mul(e.mul(t3, e.transversal(u1)), *middle));
                        if (!outer)
                            continue;
                        rhs.add_simple(e.transversal(t1), e.mul(e.transversal(t2), *outer), tc * uc);
                    }
                }
            if (!(rhs == TensorElement2::simple(ext, static_cast<index>(x), static_cast<index>(y))))
                return VerificationResult::failure("x ⊗ y = sum T^1 ⊗ T^2 F(T^3 U^1 F(U^2 F(U^3 x) y))",
                                                   e.element(static_cast<index>(x)), e.element(static_cast<index>(y)));
        }
    }
    return {};
}

} // namespace depthlab
