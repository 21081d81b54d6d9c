#include "cubar/chain.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cubar {

const ChainExpr FreeChainComplex::empty_chain_{};

void chain_add(ChainExpr& dst, const std::string& label, int64_t coeff)
{
    if (coeff == 0)
        return;
    auto it = dst.find(label);
    if (it == dst.end())
        dst.emplace(label, coeff);
    else {
        it->second += coeff;
        if (it->second == 0)
            dst.erase(it);
    }
}

void chain_add(ChainExpr& dst, const ChainExpr& src, int64_t scale)
{
    for (const auto& [l, c] : src)
        chain_add(dst, l, c * scale);
}

ChainExpr chain_scale(const ChainExpr& c, int64_t s)
{
    ChainExpr out;
    if (s != 0)
        for (const auto& [l, v] : c)
            out[l] = v * s;
    return out;
}

bool chain_is_zero(const ChainExpr& c) { return c.empty(); }

ChainExpr chain_reduce(const ChainExpr& c, const CoefficientRing& ring)
{
    if (ring.is_integers())
        return c;
    ChainExpr out;
    for (const auto& [l, v] : c) {
        int64_t r = ring.reduce(v);
        if (r != 0)
            out[l] = r;
    }
    return out;
}

std::string chain_to_string(const ChainExpr& c)
{
    if (c.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, v] : c) {
        if (!first)
            os << " ";
        if (v >= 0 && !first)
            os << "+";
        os << v << "*" << l;
        first = false;
    }
    return os.str();
}

int FreeChainComplex::min_degree() const
{
    if (bases_.empty())
        throw std::logic_error("empty complex");
    return bases_.begin()->first;
}

int FreeChainComplex::max_degree() const
{
    if (bases_.empty())
        throw std::logic_error("empty complex");
    return bases_.rbegin()->first;
}

void FreeChainComplex::set_basis(int degree, std::vector<std::string> labels)
{
    std::sort(labels.begin(), labels.end());
    for (size_t i = 0; i + 1 < labels.size(); ++i)
        if (labels[i] == labels[i + 1])
            throw std::invalid_argument("duplicate basis label '" + labels[i] + "' in degree " + std::to_string(degree));
    auto& idx = index_[degree];
    idx.clear();
    for (size_t i = 0; i < labels.size(); ++i)
        idx[labels[i]] = static_cast<int>(i);
    bases_[degree] = std::move(labels);
}

const std::vector<std::string>& FreeChainComplex::basis(int degree) const
{
    static const std::vector<std::string> empty;
    auto it = bases_.find(degree);
    return it == bases_.end() ? empty : it->second;
}

int FreeChainComplex::dim(int degree) const
{
    return static_cast<int>(basis(degree).size());
}

int FreeChainComplex::index_of(int degree, const std::string& label) const
{
    auto it = index_.find(degree);
    if (it != index_.end()) {
        auto jt = it->second.find(label);
        if (jt != it->second.end())
            return jt->second;
    }
    throw std::out_of_range("unknown basis label '" + label + "' in degree " + std::to_string(degree));
}

bool FreeChainComplex::has_label(int degree, const std::string& label) const
{
    auto it = index_.find(degree);
    return it != index_.end() && it->second.count(label) > 0;
}

void FreeChainComplex::add_boundary(int degree, const std::string& label,
                                    const std::string& target, int64_t coeff)
{
    if (!has_label(degree, label))
        throw std::out_of_range("boundary source '" + label + "' missing in degree " + std::to_string(degree));
    if (!has_label(degree + direction_, target))
        throw std::out_of_range("boundary target '" + target + "' missing in degree " + std::to_string(degree + direction_));
    chain_add(boundaries_[degree][label], target, coeff);
}

void FreeChainComplex::set_boundary(int degree, const std::string& label, ChainExpr value)
{
    if (!has_label(degree, label))
        throw std::out_of_range("boundary source '" + label + "' missing in degree " + std::to_string(degree));
    for (const auto& [t, c] : value)
        if (!has_label(degree + direction_, t))
            throw std::out_of_range("boundary target '" + t + "' missing in degree " + std::to_string(degree + direction_));
    boundaries_[degree][label] = std::move(value);
}

const ChainExpr& FreeChainComplex::boundary(int degree, const std::string& label) const
{
    auto it = boundaries_.find(degree);
    if (it == boundaries_.end())
        return empty_chain_;
    auto jt = it->second.find(label);
    return jt == it->second.end() ? empty_chain_ : jt->second;
}

ChainExpr FreeChainComplex::boundary_of(int degree, const ChainExpr& c) const
{
    ChainExpr out;
    for (const auto& [l, v] : c)
        chain_add(out, boundary(degree, l), v);
    return out;
}

SparseMatInt FreeChainComplex::boundary_matrix(int degree) const
{
    SparseMatInt m(dim(degree + direction_), dim(degree));
    for (const auto& l : basis(degree))
        for (const auto& [t, c] : boundary(degree, l))
            m.add(index_of(degree + direction_, t), index_of(degree, l), c);
    return m;
}

std::vector<std::pair<int, std::string>> FreeChainComplex::verify_d_squared() const
{
    std::vector<std::pair<int, std::string>> bad;
    for (const auto& [deg, labels] : bases_)
        for (const auto& l : labels) {
            ChainExpr dd = boundary_of(deg + direction_, boundary(deg, l));
            if (!chain_is_zero(dd))
                bad.emplace_back(deg, l);
        }
    return bad;
}

HomologySummary FreeChainComplex::homology(int degree, const CoefficientRing& ring) const
{
    if (bases_.empty() || degree < min_degree() || degree > max_degree())
        throw std::out_of_range("homology degree " + std::to_string(degree) + " out of range");
    // out-map leaves degree; in-map arrives from degree - direction
    SparseMatInt out_map = boundary_matrix(degree);
    SparseMatInt in_map = boundary_matrix(degree - direction_);
    HomologySummary h;
    h.degree = degree;
    if (ring.is_integers()) {
        auto in_factors = smith_normal_form(in_map);
        int r_out = integer_rank(out_map);
        h.betti = dim(degree) - r_out - static_cast<int>(in_factors.size());
        for (const auto& f : in_factors)
            if (f > 1)
                h.torsion.push_back(f);
    } else {
        h.betti = dim(degree) - out_map.rank_mod_p(ring.p) - in_map.rank_mod_p(ring.p);
    }
    return h;
}

std::vector<HomologySummary> FreeChainComplex::homology_range(int lo, int hi,
                                                              const CoefficientRing& ring) const
{
    std::vector<HomologySummary> out;
    for (int n = lo; n <= hi; ++n)
        out.push_back(homology(n, ring));
    return out;
}

void FreeChainComplex::check_degrees_or_throw() const
{
    for (const auto& [deg, m] : boundaries_)
        for (const auto& [l, chain] : m) {
            (void)index_of(deg, l);
            for (const auto& [t, c] : chain)
                (void)index_of(deg + direction_, t);
        }
}

std::string FreeChainComplex::to_matrix_text() const
{
    std::ostringstream os;
    for (const auto& [deg, labels] : bases_) {
        SparseMatInt m = boundary_matrix(deg);
        for (const auto& [rc, v] : m.entries())
            os << deg << " " << rc.first << " " << rc.second << " " << v << "\n";
    }
    return os.str();
}

FreeChainComplex build_complex(int direction,
                               const std::map<int, std::vector<std::string>>& bases,
                               const std::vector<BoundaryEntry>& entries)
{
    FreeChainComplex c(direction);
    for (const auto& [deg, labels] : bases)
        c.set_basis(deg, labels);
    for (const auto& e : entries)
        c.add_boundary(e.degree, e.source, e.target, e.coeff); // throws on unknown labels
    return c;
}

std::string tensor_label(const std::string& a, const std::string& b)
{
    return "<" + a + ">*<" + b + ">";
}

std::pair<std::string, std::string> split_tensor_label(const std::string& l)
{
    if (l.size() < 5 || l.front() != '<' || l.back() != '>')
        throw std::invalid_argument("not a tensor label: " + l);
    int depth = 0;
    for (size_t i = 0; i + 2 < l.size(); ++i) {
        if (l[i] == '<')
            ++depth;
        else if (l[i] == '>')
            --depth;
        if (depth == 0 && l[i] == '>' && l[i + 1] == '*' && l[i + 2] == '<')
            return {l.substr(1, i - 1), l.substr(i + 3, l.size() - i - 4)};
    }
    throw std::invalid_argument("malformed tensor label: " + l);
}

FreeChainComplex tensor_complex(const FreeChainComplex& a, const FreeChainComplex& b)
{
    if (a.direction() != b.direction())
        throw std::invalid_argument("tensor_complex: direction mismatch");
    FreeChainComplex out(a.direction());
    int lo = a.min_degree() + b.min_degree();
    int hi = a.max_degree() + b.max_degree();
    for (int n = lo; n <= hi; ++n) {
        std::vector<std::string> labels;
        for (int i = a.min_degree(); i <= a.max_degree(); ++i) {
            int j = n - i;
            for (const auto& la : a.basis(i))
                for (const auto& lb : b.basis(j))
                    labels.push_back(tensor_label(la, lb));
        }
        out.set_basis(n, std::move(labels));
    }
    for (int i = a.min_degree(); i <= a.max_degree(); ++i)
        for (int j = b.min_degree(); j <= b.max_degree(); ++j)
            for (const auto& la : a.basis(i))
                for (const auto& lb : b.basis(j)) {
                    const std::string src = tensor_label(la, lb);
                    for (const auto& [t, c] : a.boundary(i, la))
                        if (out.has_label(i + j + out.direction(), tensor_label(t, lb)))
                            out.add_boundary(i + j, src, tensor_label(t, lb), c);
                    int64_t sign = (i % 2 == 0) ? 1 : -1;
                    for (const auto& [t, c] : b.boundary(j, lb))
                        if (out.has_label(i + j + out.direction(), tensor_label(la, t)))
                            out.add_boundary(i + j, src, tensor_label(la, t), sign * c);
                }
    return out;
}

FreeChainComplex dualize(const FreeChainComplex& c, int max_degree)
{
    if (max_degree > c.max_degree() || max_degree < c.min_degree())
        throw std::out_of_range("dualize: max_degree outside complex range");
    FreeChainComplex d(-c.direction());
    for (int n = c.min_degree(); n <= max_degree; ++n)
        d.set_basis(n, c.basis(n));
    for (int n = c.min_degree(); n <= max_degree; ++n) {
        // dual differential out of degree n is the transpose of the map into n
        int src = n - c.direction(); // c: src -> n
        if (src < c.min_degree() || src > max_degree)
            continue;
        for (const auto& l : c.basis(src))
            for (const auto& [t, v] : c.boundary(src, l))
                d.add_boundary(n, t, l, v);
    }
    return d;
}

} // namespace cubar
