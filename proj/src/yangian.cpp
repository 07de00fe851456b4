#include "fusionkit/yangian.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>

namespace fusionkit {

namespace {

std::vector<long> make_strides(int N, int n) {
    std::vector<long> s(n, 1);
    for (int p = n - 2; p >= 0; --p) s[p] = s[p + 1] * N;
    return s;
}

long permuted_index(long idx, const Permutation& g, int N, const std::vector<long>& stride) {
    long out = 0;
    for (int p = 1; p <= g.degree(); ++p) {
        const long digit = (idx / stride[p - 1]) % N;
        out += digit * stride[g.apply(p) - 1];
    }
    return out;
}

// how many times each letter occurs in the word behind a basis index; the
// fusion action permutes tensor positions, so it is block diagonal across
// these letter-count classes
std::vector<int> letter_counts(long idx, int N, const std::vector<long>& stride) {
    std::vector<int> cnt(N, 0);
    for (long s : stride) ++cnt[static_cast<size_t>((idx / s) % N)];
    return cnt;
}

long relabel_index(long idx, const std::vector<int>& sigma, int N,
                   const std::vector<long>& stride) {
    long out = 0;
    for (long s : stride) out += static_cast<long>(sigma[static_cast<size_t>((idx / s) % N)]) * s;
    return out;
}

// index involution induced by swapping tensor slots a and b (1-based)
std::vector<int> transposition_map(int N, int n, int a, int b) {
    const auto stride = make_strides(N, n);
    const long dim = tensor_power_dim(N, n);
    std::vector<int> tr(dim);
    for (long idx = 0; idx < dim; ++idx) {
        const long da = (idx / stride[a - 1]) % N;
        const long db = (idx / stride[b - 1]) % N;
        tr[idx] = static_cast<int>(idx + (db - da) * stride[a - 1] + (da - db) * stride[b - 1]);
    }
    return tr;
}

// (e + slope*s) * p, coefficients above cap dropped
Polynomial mul_linear_truncated(const Polynomial& p, const Rational& e, const Rational& slope,
                                int cap) {
    if (p.is_zero()) return Polynomial();
    const int out_deg = std::min(cap, p.degree() + 1);
    std::vector<Rational> c(static_cast<size_t>(out_deg) + 1);
    for (int d = 0; d <= out_deg; ++d) {
        Rational v = e * p.coeff(d);
        if (d > 0) v += slope * p.coeff(d - 1);
        c[d] = std::move(v);
    }
    return Polynomial(std::move(c));
}

// Ordered product of factors (den_t - transposition_t) with linear denominators
// den_t = e_t + slope_t * s, kept as a polynomial numerator over the common
// denominator prod den_t.  Only coefficients up to a requested degree are
// tracked; the factor list is leftmost first and application goes right to
// left, matching how the group-ring products are written out.
struct LinearDenFactor {
    std::vector<int> tr;
    Rational e, slope;
};

struct NumeratorProduct {
    long ambient = 0;
    std::vector<LinearDenFactor> factors;
    int singular_count = 0;   // factors with e = 0; each contributes one power of s
    Rational den_regular;     // the denominator with s^v removed, at s = 0

    void finish() {
        singular_count = 0;
        den_regular = Rational(1);
        for (const auto& f : factors) {
            if (f.e.is_zero()) {
                if (f.slope.is_zero())
                    throw InternalError("direction fails to separate a singular pair");
                ++singular_count;
                den_regular *= f.slope;
            } else {
                den_regular *= f.e;
            }
        }
    }

    std::vector<std::pair<int, Polynomial>> run(const std::vector<std::pair<int, Rational>>& start,
                                                int cap) const {
        std::vector<Polynomial> w(ambient), nw(ambient);
        for (const auto& [i, v] : start) w[i] = Polynomial(v);
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
            for (long i = 0; i < ambient; ++i) {
                nw[i] = mul_linear_truncated(w[i], it->e, it->slope, cap);
                const Polynomial& x = w[it->tr[i]];
                if (!x.is_zero()) nw[i] -= x;
            }
            w.swap(nw);
        }
        std::vector<std::pair<int, Polynomial>> out;
        for (long i = 0; i < ambient; ++i)
            if (!w[i].is_zero()) out.emplace_back(static_cast<int>(i), std::move(w[i]));
        return out;
    }
};

// the fusion element product on its generic line, factors in pair order
NumeratorProduct fusion_numerator_product(const SkewShape& shape, int N) {
    const FusionContext ctx = FusionContext::standard(shape);
    const int n = shape.box_count();
    NumeratorProduct prod;
    prod.ambient = tensor_power_dim(N, n);
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q) {
            LinearDenFactor f;
            f.tr = transposition_map(N, n, p, q);
            f.e = Rational(ctx.contents[p - 1] - ctx.contents[q - 1]);
            f.slope = Rational(ctx.direction[p - 1] - ctx.direction[q - 1]);
            prod.factors.push_back(std::move(f));
        }
    prod.finish();
    return prod;
}

std::vector<Rational> fusion_limit_column(const NumeratorProduct& prod, long col) {
    const int v = prod.singular_count;
    std::vector<Rational> out(prod.ambient);
    for (const auto& [i, p] : prod.run({{static_cast<int>(col), Rational(1)}}, v)) {
        if (p.valuation() < v)
            throw InternalError("matrix fusion limit has a pole at the origin");
        out[i] = p.coeff(v) / prod.den_regular;
    }
    return out;
}

// Everything a pair restriction needs: the two module spaces, the kron basis
// of their product inside the combined tensor power, and its coordinate
// solver.  Built once and shared between the symbolic, pointwise and Laurent
// routes.
struct PairContext {
    ModuleSpace V1, V2;
    std::vector<int> c1, c2;
    int N = 0, n = 0, n2 = 0, d1 = 0, d2 = 0, slots = 0;
    long ambient = 0;
    SpanSolver solver{0};
    std::vector<std::vector<std::pair<int, Rational>>> kron_cols; // (i, j) lex
};

PairContext make_pair_context(const SkewShape& w, const SkewShape& w2, int N,
                              const Guards& guards) {
    PairContext ctx;
    ctx.V1 = module_space(w, N, guards);
    ctx.V2 = module_space(w2, N, guards);
    if (ctx.V1.is_zero() || ctx.V2.is_zero())
        throw std::invalid_argument("pair restriction needs nonzero module spaces");
    ctx.N = N;
    ctx.n = ctx.V1.box_count();
    ctx.n2 = ctx.V2.box_count();
    ctx.d1 = ctx.V1.dim();
    ctx.d2 = ctx.V2.dim();
    ctx.slots = ctx.n + ctx.n2;
    guard_ambient(guards, N, ctx.slots);
    ctx.ambient = tensor_power_dim(N, ctx.slots);
    ctx.c1 = contents_column_order(w);
    ctx.c2 = contents_column_order(w2);

    const long amb2 = ctx.V2.ambient_dim();
    SpanSolver solver(static_cast<int>(ctx.ambient));
    std::vector<Rational> buf(ctx.ambient);
    for (int i = 0; i < ctx.d1; ++i)
        for (int j = 0; j < ctx.d2; ++j) {
            const auto& b1 = ctx.V1.basis()[i];
            const auto& b2 = ctx.V2.basis()[j];
            std::vector<std::pair<int, Rational>> col;
            for (long a = 0; a < ctx.V1.ambient_dim(); ++a) {
                if (b1[a].is_zero()) continue;
                for (long b = 0; b < amb2; ++b) {
                    if (b2[b].is_zero()) continue;
                    col.emplace_back(static_cast<int>(a * amb2 + b), b1[a] * b2[b]);
                }
            }
            for (const auto& [idx, val] : col) buf[idx] = val;
            if (!solver.add_column(buf))
                throw InternalError("product basis columns are not independent");
            for (const auto& [idx, val] : col) buf[idx] = Rational(0);
            ctx.kron_cols.push_back(std::move(col));
        }
    ctx.solver = std::move(solver);
    return ctx;
}

// Apply the pair product, factor by factor, to every kron basis column and
// express the results back in the kron basis.  inv_factor(p, q) supplies the
// reciprocal of the factor denominator in the target field.
template <class T, class Fn>
Matrix<T> apply_pair_product(const PairContext& ctx, Fn&& inv_factor) {
    const int d = ctx.d1 * ctx.d2;
    std::vector<std::vector<int>> tr;
    std::vector<T> g;
    tr.reserve(static_cast<size_t>(ctx.n) * ctx.n2);
    for (int p = 1; p <= ctx.n; ++p)
        for (int q = 1; q <= ctx.n2; ++q) {
            tr.push_back(transposition_map(ctx.N, ctx.slots, p, ctx.n + q));
            g.push_back(inv_factor(p, q));
        }
    Matrix<T> out(d, d);
    for (int col = 0; col < d; ++col) {
        std::vector<T> v(ctx.ambient, T(0));
        for (const auto& [i, val] : ctx.kron_cols[col]) v[i] = T(val);
        for (int p = 1; p <= ctx.n; ++p)
            for (int q = ctx.n2; q >= 1; --q) {
                const size_t k = static_cast<size_t>(p - 1) * ctx.n2 + (q - 1);
                std::vector<T> nv(ctx.ambient, T(0));
                for (long i = 0; i < ctx.ambient; ++i) {
                    nv[i] = v[i];
                    const T& x = v[tr[k][i]];
                    if (!(x == T(0))) nv[i] -= g[k] * x;
                }
                v = std::move(nv);
            }
        auto coords = ctx.solver.coordinates<T>(std::move(v));
        if (!coords) throw InternalError("pair product left the restricted subspace");
        out.set_column(col, *coords);
    }
    return out;
}

MatrixRF pair_matrix_symbolic(const PairContext& ctx) {
    return apply_pair_product<RationalFunction>(ctx, [&](int p, int q) {
        const Rational e(ctx.c1[p - 1] - ctx.c2[q - 1]);
        return RationalFunction(Polynomial(Rational(1)), Polynomial::linear(e, Rational(1)));
    });
}

MatrixQ pair_matrix_at(const PairContext& ctx, const Rational& u0) {
    return apply_pair_product<Rational>(ctx, [&](int p, int q) {
        const Rational den = u0 + Rational(ctx.c1[p - 1] - ctx.c2[q - 1]);
        if (den.is_zero())
            throw std::domain_error("pair product evaluated at a pole of a factor");
        return Rational(1) / den;
    });
}

// Laurent data of the restriction at u = z via the shifted variable s = u - z.
// hint_d preloads the truncation depth with an expected pole order; the
// widening loop keeps the answer exact whatever the hint.
IntertwinerData pair_leading(const PairContext& ctx, const Rational& z, int hint_d) {
    NumeratorProduct prod;
    prod.ambient = ctx.ambient;
    for (int p = ctx.n; p >= 1; --p)
        for (int q = 1; q <= ctx.n2; ++q) {
            LinearDenFactor f;
            f.tr = transposition_map(ctx.N, ctx.slots, p, ctx.n + q);
            f.e = z + Rational(ctx.c1[p - 1] - ctx.c2[q - 1]);
            f.slope = Rational(1);
            prod.factors.push_back(std::move(f));
        }
    prod.finish();

    const int v = prod.singular_count;
    const int d = ctx.d1 * ctx.d2;
    const int cap_limit = ctx.n * ctx.n2;
    int cap = std::min(std::max(0, v - hint_d), cap_limit);
    std::vector<std::vector<std::pair<int, Polynomial>>> nums(d);
    int kmin = INT_MAX;
    for (;;) {
        kmin = INT_MAX;
        for (int col = 0; col < d; ++col) {
            nums[col] = prod.run(ctx.kron_cols[col], cap);
            for (const auto& [i, p] : nums[col]) kmin = std::min(kmin, p.valuation());
        }
        if (kmin != INT_MAX) break;
        if (cap >= cap_limit) throw InternalError("pair product vanished identically");
        cap = std::min(cap * 2 + 1, cap_limit);
    }

    IntertwinerData data;
    data.a = v - kmin;
    data.I = MatrixQ(d, d);
    for (int col = 0; col < d; ++col) {
        std::vector<Rational> y(ctx.ambient);
        for (const auto& [i, p] : nums[col]) y[i] = p.coeff(kmin) / prod.den_regular;
        auto coords = ctx.solver.coordinates<Rational>(std::move(y));
        if (!coords) throw InternalError("pair product left the restricted subspace");
        data.I.set_column(col, *coords);
    }
    data.invertible = !determinant(data.I).is_zero();
    return data;
}

SkewShape single_box_shape() { return SkewShape::from_boxes({Box{1, 1}}); }

// [T_ij]_{beta,alpha} = M[(beta, j), (alpha, i)] in the combined basis
MatrixQ aux_block(const MatrixQ& m, int dim, int N, int i, int j) {
    MatrixQ out(dim, dim);
    for (int beta = 0; beta < dim; ++beta)
        for (int alpha = 0; alpha < dim; ++alpha)
            out.at(beta, alpha) = m.at(beta * N + (j - 1), alpha * N + (i - 1));
    return out;
}

// N x N grid of operator-valued aux blocks of the single-box restriction,
// already shifted to the evaluation point: entries of R(z - u) as functions
// of u, sliced the same way as aux_block.
std::vector<MatrixRF> evaluation_blocks(const SkewShape& shape, int N, const Rational& z,
                                        const Guards& guards, int* dim_out) {
    PairContext ctx = make_pair_context(shape, single_box_shape(), N, guards);
    const MatrixRF R = pair_matrix_symbolic(ctx);
    const int d = ctx.d1;
    *dim_out = d;
    MatrixRF shifted(R.rows(), R.cols());
    for (int r = 0; r < R.rows(); ++r)
        for (int c = 0; c < R.cols(); ++c)
            shifted.at(r, c) = substitute_linear(R.at(r, c), z, Rational(-1));
    std::vector<MatrixRF> grid(static_cast<size_t>(N) * N, MatrixRF(d, d));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            MatrixRF& block = grid[static_cast<size_t>(i - 1) * N + (j - 1)];
            for (int beta = 0; beta < d; ++beta)
                for (int alpha = 0; alpha < d; ++alpha)
                    block.at(beta, alpha) = shifted.at(beta * N + (j - 1), alpha * N + (i - 1));
        }
    return grid;
}

} // namespace

long tensor_power_dim(int N, int n) {
    if (N < 1 || n < 0) throw std::invalid_argument("tensor power needs N >= 1 and n >= 0");
    long r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > (1L << 40)) throw std::invalid_argument("tensor power dimension overflow");
        r *= N;
    }
    return r;
}

MatrixQ perm_action_matrix(const Permutation& g, int N) {
    const int n = g.degree();
    const long dim = tensor_power_dim(N, n);
    const auto stride = make_strides(N, n);
    MatrixQ m(static_cast<int>(dim), static_cast<int>(dim));
    for (long idx = 0; idx < dim; ++idx)
        m.at(static_cast<int>(permuted_index(idx, g, N, stride)), static_cast<int>(idx)) =
            Rational(1);
    return m;
}

MatrixQ group_ring_action_matrix(const GroupRingQ& x, int N) {
    const int n = x.degree();
    const long dim = tensor_power_dim(N, n);
    const auto stride = make_strides(N, n);
    MatrixQ m(static_cast<int>(dim), static_cast<int>(dim));
    for (const auto& [g, c] : x.terms())
        for (long idx = 0; idx < dim; ++idx)
            m.at(static_cast<int>(permuted_index(idx, g, N, stride)), static_cast<int>(idx)) += c;
    return m;
}

MatrixQ fusion_action_matrix(const SkewShape& shape, int N, const Guards& guards) {
    const int n = shape.box_count();
    if (n == 0) throw std::invalid_argument("fusion action needs a non-empty shape");
    if (N < 1) throw std::invalid_argument("fusion action needs N >= 1");
    guard_ambient(guards, N, n);
    const NumeratorProduct prod = fusion_numerator_product(shape, N);
    MatrixQ out(static_cast<int>(prod.ambient), static_cast<int>(prod.ambient));
    for (long col = 0; col < prod.ambient; ++col)
        out.set_column(static_cast<int>(col), fusion_limit_column(prod, col));
    return out;
}

MatrixQ ModuleSpace::basis_matrix() const {
    MatrixQ m(static_cast<int>(ambient_), dim_);
    for (int k = 0; k < dim_; ++k) m.set_column(k, basis_[k]);
    return m;
}

void ModuleSpace::ensure_solver() const {
    if (solver_) return;
    SpanSolver s(static_cast<int>(ambient_));
    for (const auto& col : basis_)
        if (!s.add_column(col)) throw InternalError("module basis columns are not independent");
    solver_ = std::move(s);
}

ModuleSpace module_space(const SkewShape& shape, int N, const Guards& guards) {
    if (N < 1) throw std::invalid_argument("module space needs N >= 1");
    const int n = shape.box_count();
    if (n == 0) throw std::invalid_argument("module space needs a non-empty shape");
    guard_ambient(guards, N, n);

    ModuleSpace out;
    out.shape_ = shape;
    out.N_ = N;
    out.n_ = n;
    out.ambient_ = tensor_power_dim(N, n);

    const auto contents = contents_column_order(shape);
    bool spread = true;
    for (int p = 0; p < n && spread; ++p)
        for (int q = p + 1; q < n && spread; ++q)
            if (std::abs(contents[p] - contents[q]) <= 1) spread = false;

    if (spread) {
        // every factor 1 - (pq)/(c_p - c_q) is invertible, so the image is
        // everything and the identity columns are the pivot columns
        out.dim_ = static_cast<int>(out.ambient_);
        SpanSolver solver(static_cast<int>(out.ambient_));
        for (long i = 0; i < out.ambient_; ++i) {
            std::vector<Rational> e(out.ambient_);
            e[i] = Rational(1);
            solver.add_column(e);
            out.pivots_.push_back(static_cast<int>(i));
            out.basis_.push_back(std::move(e));
        }
        out.solver_ = std::move(solver);
    } else {
        const auto stride = make_strides(N, n);
        std::map<std::vector<int>, std::vector<long>> classes;
        for (long idx = 0; idx < out.ambient_; ++idx)
            classes[letter_counts(idx, N, stride)].push_back(idx);

        std::optional<GroupRingQ> F;
        std::optional<NumeratorProduct> prod;
        if (n <= guards.fusion_max_boxes) F = fusion_element(shape, guards);
        else prod = fusion_numerator_product(shape, N);

        // classes whose letter counts agree up to renaming the values carry
        // the same action, because renaming commutes with the position
        // permutations; compute one representative per sorted count vector
        // and carry the others over by the renaming
        struct ClassBasis {
            const std::vector<int>* key = nullptr;
            const std::vector<long>* members = nullptr;
            std::vector<std::pair<long, std::vector<Rational>>> accepted;
        };
        std::map<std::vector<int>, ClassBasis> reps;
        std::vector<int> pos(static_cast<size_t>(out.ambient_), -1);
        std::vector<std::pair<long, std::vector<Rational>>> cols;

        for (const auto& [key, members] : classes) {
            std::vector<int> canon = key;
            std::sort(canon.begin(), canon.end(), std::greater<int>());
            auto it = reps.find(canon);
            if (it == reps.end()) {
                const int m = static_cast<int>(members.size());
                for (int t = 0; t < m; ++t) pos[members[t]] = t;
                ClassBasis cb;
                cb.key = &key;
                cb.members = &members;
                Echelon<Rational> ech(m);
                for (long col : members) {
                    std::vector<Rational> v(m);
                    if (F) {
                        for (const auto& [g, c] : F->terms())
                            v[pos[permuted_index(col, g, N, stride)]] += c;
                    } else {
                        std::vector<Rational> full = fusion_limit_column(*prod, col);
                        for (int t = 0; t < m; ++t) v[t] = std::move(full[members[t]]);
                    }
                    std::vector<Rational> raw = v;
                    if (ech.insert(std::move(v)) >= 0)
                        cb.accepted.emplace_back(col, std::move(raw));
                }
                it = reps.emplace(std::move(canon), std::move(cb)).first;
                for (const auto& [col, local] : it->second.accepted) {
                    std::vector<Rational> fullv(static_cast<size_t>(out.ambient_));
                    for (int t = 0; t < m; ++t) fullv[members[t]] = local[t];
                    cols.emplace_back(col, std::move(fullv));
                }
            } else {
                const ClassBasis& cb = it->second;
                // value renaming that carries the representative class here
                std::vector<int> sigma(N, -1);
                std::vector<char> used(N, 0);
                for (int a = 0; a < N; ++a)
                    for (int b = 0; b < N; ++b)
                        if (!used[b] && key[b] == (*cb.key)[a]) {
                            sigma[a] = b;
                            used[b] = 1;
                            break;
                        }
                for (const auto& [col, local] : cb.accepted) {
                    std::vector<Rational> fullv(static_cast<size_t>(out.ambient_));
                    for (size_t t = 0; t < cb.members->size(); ++t)
                        fullv[relabel_index((*cb.members)[t], sigma, N, stride)] = local[t];
                    cols.emplace_back(relabel_index(col, sigma, N, stride), std::move(fullv));
                }
            }
        }
        std::sort(cols.begin(), cols.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [col, v] : cols) {
            out.pivots_.push_back(static_cast<int>(col));
            out.basis_.push_back(std::move(v));
        }
        out.dim_ = static_cast<int>(out.basis_.size());
    }

    if (out.dim_ != ssyt_count(shape, N))
        throw InternalError("module dimension differs from the semistandard tableau count");
    return out;
}

long module_dimension(const SkewShape& shape, int N, const Guards& guards) {
    if (N < 1) throw std::invalid_argument("module dimension needs N >= 1");
    const int n = shape.box_count();
    if (n == 0) throw std::invalid_argument("module dimension needs a non-empty shape");
    guard_ambient(guards, N, n);
    const long ambient = tensor_power_dim(N, n);

    const auto contents = contents_column_order(shape);
    bool spread = true;
    for (int p = 0; p < n && spread; ++p)
        for (int q = p + 1; q < n && spread; ++q)
            if (std::abs(contents[p] - contents[q]) <= 1) spread = false;
    if (spread) return ambient;

    const auto stride = make_strides(N, n);
    std::map<std::vector<int>, std::vector<long>> classes;
    for (long idx = 0; idx < ambient; ++idx)
        classes[letter_counts(idx, N, stride)].push_back(idx);

    std::optional<GroupRingQ> F;
    std::optional<NumeratorProduct> prod;
    std::vector<std::pair<const Permutation*, Integer>> scaled;
    if (n <= guards.fusion_max_boxes) {
        F = fusion_element(shape, guards);
        Integer den(1);
        for (const auto& [g, c] : F->terms()) den = lcm(den, c.den());
        // integer accumulation against the common denominator; a common
        // scale does not change any rank, so it is never divided back out
        for (const auto& [g, c] : F->terms())
            scaled.emplace_back(&g, c.num() * (den / c.den()));
    } else {
        prod = fusion_numerator_product(shape, N);
    }

    std::map<std::vector<int>, long> canon_rank;
    std::vector<int> pos(static_cast<size_t>(ambient), -1);
    long dim = 0;
    for (const auto& [key, members] : classes) {
        std::vector<int> canon = key;
        std::sort(canon.begin(), canon.end(), std::greater<int>());
        auto it = canon_rank.find(canon);
        if (it == canon_rank.end()) {
            const int m = static_cast<int>(members.size());
            for (int t = 0; t < m; ++t) pos[members[t]] = t;
            Echelon<Rational> ech(m);
            if (F) {
                std::vector<Integer> acc(m);
                for (long col : members) {
                    for (Integer& x : acc) x = 0;
                    for (const auto& [g, s] : scaled)
                        acc[pos[permuted_index(col, *g, N, stride)]] += s;
                    std::vector<Rational> v;
                    v.reserve(m);
                    for (const Integer& x : acc) v.emplace_back(x);
                    if (ech.insert(std::move(v)) >= 0 && ech.rank() == m) break;
                }
            } else {
                for (long col : members) {
                    std::vector<Rational> full = fusion_limit_column(*prod, col);
                    std::vector<Rational> v(m);
                    for (int t = 0; t < m; ++t) v[t] = std::move(full[members[t]]);
                    if (ech.insert(std::move(v)) >= 0 && ech.rank() == m) break;
                }
            }
            it = canon_rank.emplace(std::move(canon), ech.rank()).first;
        }
        dim += it->second;
    }
    return dim;
}

MatrixQ kron_swap_matrix(int d1, int d2) {
    MatrixQ m(d1 * d2, d1 * d2);
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d2; ++j) m.at(j * d1 + i, i * d2 + j) = Rational(1);
    return m;
}

MatrixRF r_matrix(const SkewShape& w, const SkewShape& w2, int N, const Guards& guards) {
    const PairContext ctx = make_pair_context(w, w2, N, guards);
    return pair_matrix_symbolic(ctx);
}

MatrixQ r_matrix_at(const SkewShape& w, const SkewShape& w2, int N, const Rational& u0,
                    const Guards& guards) {
    const PairContext ctx = make_pair_context(w, w2, N, guards);
    return pair_matrix_at(ctx, u0);
}

IntertwinerData intertwiner_leading(const SkewShape& w, const SkewShape& w2, int N,
                                    const Rational& z, const Guards& guards) {
    const PairContext ctx = make_pair_context(w, w2, N, guards);
    const int hint = (z.is_zero() && w.boxes_column_order() == w2.boxes_column_order())
                         ? durfee_rank_formula(w)
                         : 0;
    return pair_leading(ctx, z, hint);
}

const MatrixQ& ElementaryModule::generator(int s, int i, int j) const {
    if (s < 0 || s > s_max || i < 1 || j < 1 || i > space.N() || j > space.N())
        throw std::out_of_range("generator index out of range");
    return generator_matrices[s][static_cast<size_t>(i - 1) * space.N() + (j - 1)];
}

ElementaryModule elementary_generators(const SkewShape& shape, int N, const Rational& z,
                                       int s_max, const Guards& guards) {
    if (s_max < 0) throw std::invalid_argument("negative expansion order");
    PairContext ctx = make_pair_context(shape, single_box_shape(), N, guards);
    const MatrixRF R = pair_matrix_symbolic(ctx);
    const int d = ctx.d1;
    const int D = d * N;

    std::vector<MatrixQ> layer(s_max + 1, MatrixQ(D, D));
    for (int r = 0; r < D; ++r)
        for (int c = 0; c < D; ++c) {
            const RationalFunction f = substitute_linear(R.at(r, c), z, Rational(-1));
            const auto coeffs = series_coefficients_at_infinity(f, s_max);
            for (int s = 0; s <= s_max; ++s) layer[s].at(r, c) = coeffs[s];
        }
    if (!(layer[0] == MatrixQ::identity(D)))
        throw InternalError("elementary expansion at infinity does not start from the identity");

    ElementaryModule out;
    out.space = std::move(ctx.V1);
    out.z = z;
    out.s_max = s_max;
    out.generator_matrices.resize(s_max + 1);
    for (int s = 0; s <= s_max; ++s)
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j)
                out.generator_matrices[s].push_back(aux_block(layer[s], d, N, i, j));
    return out;
}

std::vector<MatrixQ> tensor_module_generators(
    const std::vector<std::pair<SkewShape, Rational>>& parts, int N, int s_max,
    bool opposite_order, const Guards& guards) {
    if (parts.empty()) throw std::invalid_argument("tensor module needs at least one factor");
    if (s_max < 0) throw std::invalid_argument("negative expansion order");

    std::vector<std::vector<MatrixRF>> grids;
    std::vector<int> dims;
    long D = 1;
    for (const auto& [shape, zm] : parts) {
        int d = 0;
        grids.push_back(evaluation_blocks(shape, N, zm, guards, &d));
        dims.push_back(d);
        D *= d;
        guard_burnside(guards, D);
    }

    // aux-space matrix product; the coproduct puts later factors on the left
    std::vector<MatrixRF> acc = std::move(grids[0]);
    for (size_t m = 1; m < grids.size(); ++m) {
        const int dm = dims[m];
        const int dprev = acc[0].rows();
        std::vector<MatrixRF> next(static_cast<size_t>(N) * N, MatrixRF(dprev * dm, dprev * dm));
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) {
                MatrixRF sum(dprev * dm, dprev * dm);
                for (int a = 1; a <= N; ++a) {
                    const size_t ia = static_cast<size_t>(i - 1) * N + (a - 1);
                    const size_t aj = static_cast<size_t>(a - 1) * N + (j - 1);
                    if (opposite_order)
                        sum = sum + kronecker(acc[aj], grids[m][ia]);
                    else
                        sum = sum + kronecker(acc[ia], grids[m][aj]);
                }
                next[static_cast<size_t>(i - 1) * N + (j - 1)] = std::move(sum);
            }
        acc = std::move(next);
    }

    const int Dw = acc[0].rows();
    std::vector<std::vector<MatrixQ>> layers(s_max + 1,
                                             std::vector<MatrixQ>(static_cast<size_t>(N) * N,
                                                                  MatrixQ(Dw, Dw)));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            const size_t ij = static_cast<size_t>(i - 1) * N + (j - 1);
            for (int r = 0; r < Dw; ++r)
                for (int c = 0; c < Dw; ++c) {
                    const auto coeffs = series_coefficients_at_infinity(acc[ij].at(r, c), s_max);
                    for (int s = 0; s <= s_max; ++s) layers[s][ij].at(r, c) = coeffs[s];
                }
            const bool want_identity = (i == j);
            const MatrixQ expected = want_identity ? MatrixQ::identity(Dw) : MatrixQ(Dw, Dw);
            if (!(layers[0][ij] == expected))
                throw InternalError("tensor expansion at infinity does not start from the identity");
        }

    std::vector<MatrixQ> out;
    out.reserve(static_cast<size_t>(s_max) * N * N);
    for (int s = 1; s <= s_max; ++s)
        for (size_t ij = 0; ij < static_cast<size_t>(N) * N; ++ij)
            out.push_back(std::move(layers[s][ij]));
    return out;
}

std::vector<std::pair<int, int>> IrreducibilityReport::failing_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& p : pairs)
        if (!p.data.invertible) out.emplace_back(p.first, p.second);
    return out;
}

IrreducibilityReport irreducibility_criterion(
    const std::vector<std::pair<SkewShape, Rational>>& parts, int N, const Guards& guards) {
    if (parts.empty()) throw std::invalid_argument("criterion needs at least one factor");
    IrreducibilityReport report;
    const int k = static_cast<int>(parts.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            PairEvidence ev;
            ev.first = i + 1;
            ev.second = j + 1;
            ev.z_difference = parts[i].second - parts[j].second;
            ev.data = intertwiner_leading(parts[i].first, parts[j].first, N, ev.z_difference,
                                          guards);
            if (!ev.data.invertible) report.irreducible = false;
            report.pairs.push_back(std::move(ev));
        }
    return report;
}

bool burnside_irreducible(const std::vector<std::pair<SkewShape, Rational>>& parts, int N,
                          int s_max, const Guards& guards) {
    if (parts.empty()) throw std::invalid_argument("oracle needs at least one factor");
    long D = 1;
    for (const auto& [shape, z] : parts) {
        const ModuleSpace V = module_space(shape, N, guards);
        if (V.is_zero()) throw std::invalid_argument("oracle needs nonzero module factors");
        D *= V.dim();
        guard_burnside(guards, D);
    }
    const long full = D * D;
    const int cap = s_max > 0 ? s_max : static_cast<int>(D) * N;
    const auto gens = tensor_module_generators(parts, N, cap, false, guards);
    const int per_layer = N * N;
    int prev1 = -1, prev2 = -2;
    for (int s = 1; s <= cap; ++s) {
        const std::vector<MatrixQ> prefix(gens.begin(), gens.begin() + s * per_layer);
        const int dim = algebra_closure_dimension(prefix);
        if (dim == full) return true;
        if (dim == prev1 && prev1 == prev2) return false;
        prev2 = prev1;
        prev1 = dim;
    }
    throw std::runtime_error(
        "burnside oracle inconclusive: closure dimension still growing at the order cap");
}

bool verify_identities(const SkewShape& w, const SkewShape& w2, const SkewShape& w3, int N,
                       int samples, const Guards& guards, unsigned seed) {
    if (samples < 1) throw std::invalid_argument("at least one sample point required");
    std::mt19937 rng(seed);
    auto frac = [&](int den) {
        const int k = static_cast<int>(rng() % 17u) - 8;
        const int r = 1 + static_cast<int>(rng() % static_cast<unsigned>(den - 1));
        return Rational(k * den + r, den);
    };

    std::vector<SkewShape> shapes{w, w2, w3, single_box_shape()};
    std::map<std::pair<int, int>, PairContext> ctxs;
    auto ctx_of = [&](int a, int b) -> PairContext& {
        const auto key = std::make_pair(a, b);
        auto it = ctxs.find(key);
        if (it == ctxs.end())
            it = ctxs.emplace(key, make_pair_context(shapes[a], shapes[b], N, guards)).first;
        return it->second;
    };

    std::vector<int> distinct;
    for (int x = 0; x < 3; ++x) {
        bool seen = false;
        for (int y : distinct)
            if (shapes[y].boxes_column_order() == shapes[x].boxes_column_order()) seen = true;
        if (!seen) distinct.push_back(x);
    }

    auto ybe_ok = [&](const Rational& u0, const Rational& v0) {
        const MatrixQ A = pair_matrix_at(ctx_of(0, 1), u0 - v0);
        const MatrixQ B = pair_matrix_at(ctx_of(0, 2), u0);
        const MatrixQ C = pair_matrix_at(ctx_of(1, 2), v0);
        const std::vector<int> dims{ctx_of(0, 1).d1, ctx_of(0, 1).d2, ctx_of(1, 2).d2};
        const MatrixQ L12 = lift_two_slots(A, dims, 1, 2);
        const MatrixQ L13 = lift_two_slots(B, dims, 1, 3);
        const MatrixQ L23 = lift_two_slots(C, dims, 2, 3);
        return L12 * L13 * L23 == L23 * L13 * L12;
    };

    auto rr_ok = [&](int a, int b, const Rational& u0) {
        const PairContext& cab = ctx_of(a, b);
        const MatrixQ Rab = pair_matrix_at(cab, u0);
        const MatrixQ Rba = pair_matrix_at(ctx_of(b, a), -u0);
        const MatrixQ flipped =
            kron_swap_matrix(cab.d2, cab.d1) * Rba * kron_swap_matrix(cab.d1, cab.d2);
        const Rational scalar = pair_scalar_product(shapes[a], shapes[b]).evaluate(u0);
        return Rab * flipped == scalar * MatrixQ::identity(cab.d1 * cab.d2);
    };

    auto rtt_ok = [&](int x, const Rational& z0, const Rational& u0, const Rational& v0) {
        const PairContext& cxe = ctx_of(x, 3);
        const MatrixQ Tu = pair_matrix_at(cxe, z0 - u0);
        const MatrixQ Tv = pair_matrix_at(cxe, z0 - v0);
        const std::vector<int> dims{cxe.d1, N, N};
        const MatrixQ T01 = lift_two_slots(Tu, dims, 1, 2);
        const MatrixQ T02 = lift_two_slots(Tv, dims, 1, 3);
        const MatrixQ Raux = lift_two_slots(
            (u0 - v0) * MatrixQ::identity(N * N) - kron_swap_matrix(N, N), dims, 2, 3);
        return T01 * T02 * Raux == Raux * T02 * T01;
    };

    auto chain_ok = [&](int x, const Rational& z0) {
        const auto cs = contents_column_order(shapes[x]);
        std::vector<std::pair<SkewShape, Rational>> parts;
        for (int c : cs) parts.emplace_back(shapes[3], Rational(c) + z0);
        const auto gens = tensor_module_generators(parts, N, 3, false, guards);
        const ElementaryModule em = elementary_generators(shapes[x], N, z0, 3, guards);
        const MatrixQ B = em.space.basis_matrix();
        for (int s = 1; s <= 3; ++s)
            for (int i = 1; i <= N; ++i)
                for (int j = 1; j <= N; ++j) {
                    const MatrixQ& chain =
                        gens[static_cast<size_t>(s - 1) * N * N + static_cast<size_t>(i - 1) * N +
                             (j - 1)];
                    if (!(chain * B == B * em.generator(s, i, j))) return false;
                }
        return true;
    };

    auto scalar_ok = [&](int a, int b, const Rational& z) {
        const PairContext& cab = ctx_of(a, b);
        const IntertwinerData Iab = pair_leading(cab, z, 0);
        const IntertwinerData Iba = pair_leading(ctx_of(b, a), -z, 0);
        const MatrixQ flipped =
            kron_swap_matrix(cab.d2, cab.d1) * Iba.I * kron_swap_matrix(cab.d1, cab.d2);
        const MatrixQ Q = Iab.I * flipped;
        return Q == Q.at(0, 0) * MatrixQ::identity(Q.rows());
    };

    // the two-copy matrix train: leading coefficient at the origin must be a
    // nonzero multiple of the block flip when the evaluation points have a
    // non-integer difference
    auto train_ok = [&](int a, int b, const Rational& za, const Rational& zb) {
        const PairContext& cab = ctx_of(a, b);
        const ModuleSpace& Va = cab.V1;
        const ModuleSpace& Vb = cab.V2;
        const int na = Va.box_count(), nb = Vb.box_count();
        const int slots = 2 * (na + nb);
        guard_ambient(guards, N, slots);
        const long ambient = tensor_power_dim(N, slots);
        const int D = Va.dim() * Vb.dim();

        const auto& ca = cab.c1;
        const auto& cb = cab.c2;
        const int off[4] = {0, na, na + nb, 2 * na + nb};
        NumeratorProduct prod;
        prod.ambient = ambient;
        for (int j = 1; j <= 2; ++j)
            for (int i = 2; i >= 1; --i) {
                const auto& ci = (i == 1) ? ca : cb;
                const auto& cj = (j == 1) ? ca : cb;
                const Rational dz = ((i == 1) ? za : zb) - ((j == 1) ? za : zb);
                for (int p = static_cast<int>(ci.size()); p >= 1; --p)
                    for (int q = 1; q <= static_cast<int>(cj.size()); ++q) {
                        LinearDenFactor f;
                        f.tr = transposition_map(N, slots, off[i - 1] + p, off[j + 1] + q);
                        f.e = dz + Rational(ci[p - 1] - cj[q - 1]);
                        f.slope = Rational(-1);
                        prod.factors.push_back(std::move(f));
                    }
            }
        prod.finish();

        SpanSolver solver(static_cast<int>(ambient));
        std::vector<std::vector<std::pair<int, Rational>>> cols;
        std::vector<Rational> buf(ambient);
        const long ambA = Va.ambient_dim(), ambB = Vb.ambient_dim();
        for (int i = 0; i < Va.dim(); ++i)
            for (int j = 0; j < Vb.dim(); ++j)
                for (int k = 0; k < Va.dim(); ++k)
                    for (int l = 0; l < Vb.dim(); ++l) {
                        std::vector<std::pair<int, Rational>> col;
                        for (long a1 = 0; a1 < ambA; ++a1) {
                            if (Va.basis()[i][a1].is_zero()) continue;
                            for (long b1 = 0; b1 < ambB; ++b1) {
                                if (Vb.basis()[j][b1].is_zero()) continue;
                                for (long a2 = 0; a2 < ambA; ++a2) {
                                    if (Va.basis()[k][a2].is_zero()) continue;
                                    for (long b2 = 0; b2 < ambB; ++b2) {
                                        if (Vb.basis()[l][b2].is_zero()) continue;
                                        const long idx =
                                            ((a1 * ambB + b1) * ambA + a2) * ambB + b2;
                                        col.emplace_back(static_cast<int>(idx),
                                                         Va.basis()[i][a1] * Vb.basis()[j][b1] *
                                                             Va.basis()[k][a2] *
                                                             Vb.basis()[l][b2]);
                                    }
                                }
                            }
                        }
                        for (const auto& [idx, val] : col) buf[idx] = val;
                        if (!solver.add_column(buf))
                            throw InternalError("product basis columns are not independent");
                        for (const auto& [idx, val] : col) buf[idx] = Rational(0);
                        cols.push_back(std::move(col));
                    }

        const int v = prod.singular_count;
        const int expected_a = durfee_rank_formula(shapes[a]) + durfee_rank_formula(shapes[b]);
        const int cap_limit = (na + nb) * (na + nb);
        int cap = std::min(std::max(0, v - expected_a), cap_limit);
        std::vector<std::vector<std::pair<int, Polynomial>>> nums(cols.size());
        int kmin = INT_MAX;
        for (;;) {
            kmin = INT_MAX;
            for (size_t col = 0; col < cols.size(); ++col) {
                nums[col] = prod.run(cols[col], cap);
                for (const auto& [i, p] : nums[col]) kmin = std::min(kmin, p.valuation());
            }
            if (kmin != INT_MAX) break;
            if (cap >= cap_limit) throw InternalError("matrix train vanished identically");
            cap = std::min(cap * 2 + 1, cap_limit);
        }
        if (v - kmin != expected_a) return false;

        MatrixQ L(D * D, D * D);
        for (size_t col = 0; col < cols.size(); ++col) {
            std::vector<Rational> y(ambient);
            for (const auto& [i, p] : nums[col]) y[i] = p.coeff(kmin) / prod.den_regular;
            auto coords = solver.coordinates<Rational>(std::move(y));
            if (!coords) throw InternalError("matrix train left the restricted subspace");
            L.set_column(static_cast<int>(col), *coords);
        }
        // the scale sits on any flip entry: P sends column (I,J) to row (J,I)
        const MatrixQ P = kron_swap_matrix(D, D);
        const Rational s0 = L.at(0, 0);
        if (s0.is_zero()) return false;
        return L == s0 * P;
    };

    bool ok = true;
    for (int t = 0; t < samples && ok; ++t) {
        const Rational u0 = frac(3), v0 = frac(5), z0 = frac(7);
        ok = ok && ybe_ok(u0, v0);
        ok = ok && rr_ok(0, 1, u0) && rr_ok(0, 2, u0) && rr_ok(1, 2, v0);
        for (int x : distinct) {
            if (!ok) break;
            ok = ok && rtt_ok(x, z0, u0, v0);
            ok = ok && chain_ok(x, z0);
        }
        const int zi = static_cast<int>(rng() % 5u) - 2;
        ok = ok && scalar_ok(0, 1, Rational(zi));
        ok = ok && scalar_ok(1, 2, z0);
        ok = ok && train_ok(0, 1, frac(3), frac(5));
    }
    return ok;
}

} // namespace fusionkit
