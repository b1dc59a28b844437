#include "haarcalc/gg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace haarcalc {

namespace {

Int int_pow(Int base, Int e) {
    Int r = 1;
    for (Int i = 0; i < e; ++i) r *= base;
    return r;
}

std::vector<std::vector<Int>> partitions_up_to(Int cap) {
    std::vector<std::vector<Int>> out;
    // All weakly decreasing sequences with sum <= cap.
    std::vector<Int> cur;
    auto rec = [&](auto&& self, Int remaining, Int maxpart) -> void {
        out.push_back(cur);
        for (Int next = std::min(remaining, maxpart); next >= 1; --next) {
            cur.push_back(next);
            self(self, remaining - next, next);
            cur.pop_back();
        }
    };
    rec(rec, cap, cap);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        Int sa = std::accumulate(a.begin(), a.end(), Int{0});
        Int sb = std::accumulate(b.begin(), b.end(), Int{0});
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return out;
}

// Index of an element in enumeration order (mixed radix, first part fastest).
size_t element_index(const FinitePGroup& g, const std::vector<Int>& x) {
    size_t idx = 0, weight = 1;
    for (size_t i = 0; i < x.size(); ++i) {
        idx += (size_t)x[i] * weight;
        weight *= (size_t)int_pow(g.p, g.lambda[i]);
    }
    return idx;
}

struct EpiInfo {
    GGMatrix mat;
    std::vector<size_t> kernel;  // sorted element indices of total
    bool surjective{false};
};

std::vector<GGMatrix> enumerate_homs(const FinitePGroup& a, const FinitePGroup& b) {
    Int rows = b.parts(), cols = a.parts();
    std::vector<Int> stride(rows * cols), count(rows * cols);
    for (Int j = 0; j < rows; ++j)
        for (Int i = 0; i < cols; ++i) {
            Int mu = b.lambda[j], la = a.lambda[i];
            stride[j * cols + i] = int_pow(b.p, std::max<Int>(0, mu - la));
            count[j * cols + i] = int_pow(b.p, std::min(mu, la));
        }
    size_t total = 1;
    for (Int c : count) total *= (size_t)c;
    std::vector<GGMatrix> homs;
    homs.reserve(total);
    std::vector<Int> digit(rows * cols, 0);
    for (size_t k = 0; k < total; ++k) {
        GGMatrix m(rows, std::vector<Int>(cols));
        for (Int j = 0; j < rows; ++j)
            for (Int i = 0; i < cols; ++i) m[j][i] = digit[j * cols + i] * stride[j * cols + i];
        homs.push_back(std::move(m));
        for (size_t d = 0; d < digit.size(); ++d) {
            if (++digit[d] < count[d]) break;
            digit[d] = 0;
        }
    }
    return homs;
}

}  // namespace

Int FinitePGroup::length() const { return std::accumulate(lambda.begin(), lambda.end(), Int{0}); }

Int FinitePGroup::order() const { return int_pow(p, length()); }

std::size_t GGComplex::edge_count() const {
    std::size_t n = 0;
    for (auto& [b, e] : coker_ranges) n += (e - b) * (e - b);
    return n;
}

bool is_valid_hom(const FinitePGroup& a, const FinitePGroup& b, const GGMatrix& m) {
    if ((Int)m.size() != b.parts()) return false;
    for (Int j = 0; j < b.parts(); ++j) {
        if ((Int)m[j].size() != a.parts()) return false;
        Int mod = int_pow(b.p, b.lambda[j]);
        for (Int i = 0; i < a.parts(); ++i) {
            Int v = m[j][i];
            if (v < 0 || v >= mod) return false;
            // p^{lambda_i} . v must vanish in Z/p^{mu_j}
            if ((v * int_pow(a.p, std::min(a.lambda[i], b.lambda[j]))) % mod != 0) return false;
        }
    }
    return true;
}

std::vector<std::vector<Int>> enumerate_elements(const FinitePGroup& g) {
    std::vector<std::vector<Int>> out;
    size_t total = (size_t)g.order();
    std::vector<Int> x(g.parts(), 0);
    for (size_t k = 0; k < total; ++k) {
        out.push_back(x);
        for (Int i = 0; i < g.parts(); ++i) {
            if (++x[i] < int_pow(g.p, g.lambda[i])) break;
            x[i] = 0;
        }
    }
    return out;
}

std::vector<Int> apply_hom(const FinitePGroup& a, const FinitePGroup& b, const GGMatrix& m,
                           const std::vector<Int>& x) {
    std::vector<Int> y(b.parts(), 0);
    for (Int j = 0; j < b.parts(); ++j) {
        Int mod = int_pow(b.p, b.lambda[j]);
        Int acc = 0;
        for (Int i = 0; i < a.parts(); ++i) acc = (acc + m[j][i] * (x[i] % mod)) % mod;
        y[j] = acc;
    }
    return y;
}

bool validate_ggsequence(const GGComplex& c, const GGSequence& s, std::string* why) {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    const FinitePGroup& A = c.objects[s.sub];
    const FinitePGroup& B = c.objects[s.total];
    const FinitePGroup& Q = c.objects[s.coker];
    if (!is_valid_hom(A, B, s.mono)) return fail("mono is not a homomorphism");
    if (!is_valid_hom(B, Q, s.epi)) return fail("epi is not a homomorphism");
    if (B.order() != A.order() * Q.order()) return fail("order equation violated");

    auto elements_a = enumerate_elements(A);
    auto elements_b = enumerate_elements(B);
    std::vector<bool> in_image(elements_b.size(), false);
    size_t image_size = 0;
    for (auto& x : elements_a) {
        auto y = apply_hom(A, B, s.mono, x);
        size_t idx = element_index(B, y);
        if (!in_image[idx]) {
            in_image[idx] = true;
            ++image_size;
        }
    }
    if (image_size != elements_a.size()) return fail("mono is not injective");

    std::vector<bool> hit(Q.order(), false);
    size_t hits = 0;
    for (auto& x : elements_b) {
        auto q = apply_hom(B, Q, s.epi, x);
        bool zero = std::all_of(q.begin(), q.end(), [](Int v) { return v == 0; });
        if (zero != in_image[element_index(B, x)]) return fail("image(mono) != kernel(epi)");
        size_t qi = element_index(Q, q);
        if (!hit[qi]) {
            hit[qi] = true;
            ++hits;
        }
    }
    if (hits != (size_t)Q.order()) return fail("epi is not surjective");
    return true;
}

namespace {

// All sequences A >-> B ->> * for one object pair, grouped by cokernel.
void build_pair(const std::vector<FinitePGroup>& objects, int a_idx, int b_idx,
                std::vector<std::vector<GGSequence>>& buckets) {
    const FinitePGroup& A = objects[a_idx];
    const FinitePGroup& B = objects[b_idx];
    if (A.length() > B.length()) return;

    auto elements_a = enumerate_elements(A);
    auto elements_b = enumerate_elements(B);
    size_t border = elements_b.size();

    // Locate the cokernel object of a subgroup via its order-p^j element counts.
    Int qlen = B.length() - A.length();
    std::vector<int> candidates;
    for (size_t i = 0; i < objects.size(); ++i)
        if (objects[i].p == B.p && objects[i].length() == qlen) candidates.push_back((int)i);

    // Cache epimorphism data per candidate cokernel.
    std::vector<std::vector<EpiInfo>> epis(candidates.size());
    for (size_t ci = 0; ci < candidates.size(); ++ci) {
        const FinitePGroup& Q = objects[candidates[ci]];
        for (auto& h : enumerate_homs(B, Q)) {
            EpiInfo info;
            std::vector<bool> hit(Q.order(), false);
            size_t hits = 0;
            for (size_t xi = 0; xi < border; ++xi) {
                auto q = apply_hom(B, Q, h, elements_b[xi]);
                if (std::all_of(q.begin(), q.end(), [](Int v) { return v == 0; }))
                    info.kernel.push_back(xi);
                size_t qi = element_index(Q, q);
                if (!hit[qi]) {
                    hit[qi] = true;
                    ++hits;
                }
            }
            info.surjective = hits == (size_t)Q.order();
            if (!info.surjective || info.kernel.size() != elements_a.size()) continue;
            info.mat = h;
            epis[ci].push_back(std::move(info));
        }
    }

    for (auto& m : enumerate_homs(A, B)) {
        // Injectivity and image set.
        std::vector<size_t> image;
        image.reserve(elements_a.size());
        std::vector<bool> seen(border, false);
        bool mono = true;
        for (auto& x : elements_a) {
            size_t idx = element_index(B, apply_hom(A, B, m, x));
            if (seen[idx]) {
                mono = false;
                break;
            }
            seen[idx] = true;
            image.push_back(idx);
        }
        if (!mono) continue;
        std::sort(image.begin(), image.end());
        // Every epi whose kernel equals the image closes an exact sequence.
        for (size_t ci = 0; ci < candidates.size(); ++ci)
            for (auto& e : epis[ci])
                if (e.kernel == image)
                    buckets[candidates[ci]].push_back(GGSequence{a_idx, b_idx, candidates[ci], m, e.mat});
    }
}

GGComplex assemble(Int p, int cap, std::vector<FinitePGroup> objects,
                   std::vector<std::vector<GGSequence>> buckets) {
    GGComplex c;
    c.p = p;
    c.cap = cap;
    c.objects = std::move(objects);
    for (size_t q = 0; q < buckets.size(); ++q) {
        size_t begin = c.sequences.size();
        for (auto& s : buckets[q]) c.sequences.push_back(std::move(s));
        c.coker_ranges.emplace_back(begin, c.sequences.size());
    }
    return c;
}

std::vector<FinitePGroup> make_objects(Int p, int cap) {
    if (!is_prime(p)) throw std::domain_error("gg_build: p must be prime");
    if (cap < 1 || cap > 3) throw std::domain_error("gg_build: cap must be in 1..3");
    std::vector<FinitePGroup> objects;
    for (auto& lam : partitions_up_to(cap)) objects.push_back(FinitePGroup{p, lam});
    return objects;
}

}  // namespace

GGComplex gg_build_serial(Int p, int cap) {
    auto objects = make_objects(p, cap);
    std::vector<std::vector<GGSequence>> buckets(objects.size());
    for (int a = 0; a < (int)objects.size(); ++a)
        for (int b = 0; b < (int)objects.size(); ++b) build_pair(objects, a, b, buckets);
    return assemble(p, cap, std::move(objects), std::move(buckets));
}

GGComplex gg_build(Int p, int cap) {
    auto objects = make_objects(p, cap);
    int n = (int)objects.size();
    int tasks = n * n;
    std::vector<std::vector<std::vector<GGSequence>>> local(tasks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int t = 0; t < tasks; ++t) {
        local[t].assign(objects.size(), {});
        build_pair(objects, t / n, t % n, local[t]);
    }
    // Ordered merge: identical sequence order as the serial build.
    std::vector<std::vector<GGSequence>> buckets(objects.size());
    for (int t = 0; t < tasks; ++t)
        for (size_t q = 0; q < objects.size(); ++q)
            for (auto& s : local[t][q]) buckets[q].push_back(std::move(s));
    return assemble(p, cap, std::move(objects), std::move(buckets));
}

namespace {

struct UnionFind {
    std::vector<int> parent, size;
    explicit UnionFind(int n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

}  // namespace

GGPi0Report gg_pi0(const GGComplex& c) {
    GGPi0Report rep;
    int n = (int)c.objects.size();
    rep.vertex_count = c.vertex_count();
    rep.edge_count = c.edge_count();
    UnionFind uf(rep.vertex_count);

    auto diff = [&](int vid) {
        return c.objects[vid % n].length() - c.objects[vid / n].length();
    };

    for (auto& [begin, end] : c.coker_ranges) {
        for (size_t i = begin; i < end; ++i) {
            for (size_t j = begin; j < end; ++j) {
                const GGSequence& s = c.sequences[i];
                const GGSequence& t = c.sequences[j];
                int v0 = c.vertex_id(s.sub, t.sub);
                int v1 = c.vertex_id(s.total, t.total);
                if (diff(v0) != diff(v1)) rep.edges_respect_difference = false;
                uf.unite(v0, v1);
            }
        }
    }

    rep.component_of.resize(rep.vertex_count);
    std::map<int, Int> root_diff;
    for (int v = 0; v < rep.vertex_count; ++v) {
        int r = uf.find(v);
        rep.component_of[v] = r;
        auto it = root_diff.find(r);
        if (it == root_diff.end())
            root_diff[r] = diff(v);
        else if (it->second != diff(v))
            rep.edges_respect_difference = false;
    }
    rep.component_count = (int)root_diff.size();
    for (auto& [r, d] : root_diff) rep.components_per_difference[d] += 1;

    int base = uf.find(c.vertex_id(0, 0));
    for (int obj = 0; obj < n; ++obj)
        if (uf.find(c.vertex_id(obj, obj)) != base) rep.basepoint_diagonal_connected = false;
    return rep;
}

LoopCertificate gg_loop(const GGComplex& c, int object_index, const GGMatrix& f) {
    if (object_index < 0 || object_index >= (int)c.objects.size())
        throw std::domain_error("gg_loop: object index out of range");
    const FinitePGroup& P = c.objects[object_index];
    if (!is_valid_hom(P, P, f)) throw std::domain_error("gg_loop: f is not an endomorphism of P");
    // Invertibility: injective suffices on a finite group.
    auto elements = enumerate_elements(P);
    std::vector<bool> seen(elements.size(), false);
    for (auto& x : elements) {
        size_t idx = element_index(P, apply_hom(P, P, f, x));
        if (seen[idx]) throw std::domain_error("gg_loop: f is not an automorphism");
        seen[idx] = true;
    }

    GGMatrix empty_mono(P.parts(), std::vector<Int>{});
    GGMatrix id(P.parts(), std::vector<Int>(P.parts(), 0));
    for (Int i = 0; i < P.parts(); ++i) id[i][i] = 1;

    LoopCertificate cert;
    cert.object = object_index;
    cert.nu_first = GGSequence{0, object_index, object_index, empty_mono, id};
    cert.nu_second = cert.nu_first;
    cert.xi_first = GGSequence{0, object_index, object_index, empty_mono, f};
    cert.xi_second = cert.nu_first;
    cert.degenerate = f == id;

    for (const GGSequence* s : {&cert.nu_first, &cert.nu_second, &cert.xi_first, &cert.xi_second}) {
        std::string why;
        if (!validate_ggsequence(c, *s, &why))
            throw std::logic_error("gg_loop: certificate sequence invalid: " + why);
    }
    return cert;
}

std::string fpgroup_str(const FinitePGroup& g) {
    if (g.lambda.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (Int l : g.lambda) {
        if (!first) os << "+";
        first = false;
        os << "Z/" << int_pow(g.p, l);
    }
    return os.str();
}

}  // namespace haarcalc
