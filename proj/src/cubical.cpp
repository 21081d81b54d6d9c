#include "cubar/cubical.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cubar {

int CubeElt::dummy_count() const
{
    return std::accumulate(gaps.begin(), gaps.end(), 0);
}

std::string CubeElt::str() const
{
    if (is_clean())
        return core;
    std::string out = "n{";
    bool first = true;
    for (int p : eta_word()) {
        if (!first)
            out += ",";
        out += std::to_string(p);
        first = false;
    }
    return out + "}" + core;
}

std::vector<int> CubeElt::eta_word() const
{
    // dummy positions, ascending; this is the normalized word with the
    // innermost degeneracy first
    std::vector<int> word;
    int pos = 0;
    for (size_t g = 0; g < gaps.size(); ++g) {
        for (int t = 0; t < gaps[g]; ++t)
            word.push_back(++pos);
        if (g + 1 < gaps.size())
            ++pos; // the real coordinate
    }
    return word;
}

/* Substitute f into a frame of outer degeneracies: outer has size
 * f.degree()+1 and counts extra dummies around f's coordinates. */
static CubeElt graft(const std::vector<int>& outer, const CubeElt& f)
{
    if (static_cast<int>(outer.size()) != f.degree() + 1)
        throw std::logic_error("graft: frame size mismatch");
    CubeElt out;
    out.core = f.core;
    out.gaps.assign(f.core_degree() + 1, 0);
    int t = 0;
    out.gaps[0] += outer[0];
    int slot = 1;
    for (int g = 0; g <= f.core_degree(); ++g) {
        for (int k = 0; k < f.gaps[g]; ++k) {
            out.gaps[t] += 1;        // f's own dummy
            out.gaps[t] += outer[slot];
            ++slot;
        }
        if (g < f.core_degree()) {
            ++t;                     // f's real coordinate
            out.gaps[t] += outer[slot];
            ++slot;
        }
    }
    return out;
}

void CubicalSet::add_core(const std::string& name, int degree, bool generator)
{
    if (degrees_.count(name)) {
        if (degrees_[name] != degree)
            throw std::logic_error("core '" + name + "' re-registered with different degree");
        if (generator && !generators_.count(name))
            throw std::logic_error("core '" + name + "' re-registered as generator");
        return;
    }
    degrees_[name] = degree;
    if (generator) {
        generators_.insert(name);
        auto& v = gens_by_degree_[degree];
        v.insert(std::lower_bound(v.begin(), v.end(), name), name);
    }
    faces_[name].assign(2 * degree, CubeElt{});
}

int CubicalSet::core_degree(const std::string& name) const
{
    auto it = degrees_.find(name);
    if (it == degrees_.end())
        throw std::out_of_range("unknown cubical core '" + name + "'");
    return it->second;
}

int CubicalSet::top_degree() const
{
    int top = -1;
    for (const auto& [d, v] : gens_by_degree_)
        if (!v.empty())
            top = std::max(top, d);
    return top;
}

const std::vector<std::string>& CubicalSet::generators(int degree) const
{
    static const std::vector<std::string> empty;
    auto it = gens_by_degree_.find(degree);
    return it == gens_by_degree_.end() ? empty : it->second;
}

std::vector<std::string> CubicalSet::all_cores() const
{
    std::vector<std::string> out;
    for (const auto& [n, d] : degrees_)
        out.push_back(n);
    return out;
}

void CubicalSet::set_face(const std::string& core, int i, int eps, CubeElt value)
{
    int d = core_degree(core);
    if (i < 1 || i > d || eps < 0 || eps > 1)
        throw std::out_of_range("face (" + std::to_string(i) + "," + std::to_string(eps) + ") out of range on '" + core + "'");
    if (value.degree() != d - 1)
        throw std::logic_error("face value degree mismatch on '" + core + "'");
    (void)core_degree(value.core);
    faces_[core][2 * (i - 1) + eps] = std::move(value);
}

bool CubicalSet::has_face(const std::string& core, int i, int eps) const
{
    auto it = faces_.find(core);
    if (it == faces_.end())
        return false;
    const CubeElt& e = it->second[2 * (i - 1) + eps];
    return !e.core.empty();
}

const CubeElt& CubicalSet::core_face(const std::string& core, int i, int eps) const
{
    int d = core_degree(core);
    if (i < 1 || i > d)
        throw std::out_of_range("face index " + std::to_string(i) + " out of range on '" + core + "' (degree " + std::to_string(d) + ")");
    const CubeElt& e = faces_.at(core)[2 * (i - 1) + eps];
    if (e.core.empty())
        throw std::logic_error("missing face (" + core + "," + std::to_string(i) + "," + std::to_string(eps) + ")");
    return e;
}

CubeElt CubicalSet::face(const CubeElt& e, int i, int eps) const
{
    int D = e.degree();
    if (i < 1 || i > D)
        throw std::out_of_range("face position out of range");
    // locate position i: dummy in a gap, or a real coordinate
    int consumed = 0;
    int d = e.core_degree();
    for (int g = 0; g <= d; ++g) {
        if (i <= consumed + e.gaps[g]) {
            CubeElt out = e;
            out.gaps[g] -= 1; // d_i^eps eta_i = id
            return out;
        }
        consumed += e.gaps[g];
        if (g < d) {
            ++consumed;
            if (i == consumed) {
                int r = g + 1;
                const CubeElt& f = core_face(e.core, r, eps);
                std::vector<int> outer(e.gaps.begin(), e.gaps.end());
                outer[r - 1] += outer[r];
                outer.erase(outer.begin() + r);
                return graft(outer, f);
            }
        }
    }
    throw std::logic_error("face position lookup failed");
}

CubeElt CubicalSet::eta(const CubeElt& e, int i) const
{
    int D = e.degree();
    if (i < 1 || i > D + 1)
        throw std::out_of_range("eta position out of range");
    // new dummy goes into the gap after the last real coordinate lying
    // strictly before position i
    int d = e.core_degree();
    CubeElt out = e;
    int g = 0, prefix = 0;
    for (int r = 1; r <= d; ++r) {
        prefix += e.gaps[r - 1];
        if (prefix + r < i)
            g = r;
        else
            break;
    }
    out.gaps[g] += 1;
    return out;
}

std::vector<std::string> CubicalSet::verify_identities() const
{
    std::vector<std::string> bad;
    auto complain = [&](const std::string& what, const std::string& core) {
        bad.push_back(what + " fails on " + core);
    };
    for (const auto& [core, n] : degrees_) {
        CubeElt g = clean_elt(core);
        for (int eps = 0; eps <= 1; ++eps)
            for (int del = 0; del <= 1; ++del)
                for (int j = 1; j <= n - 1; ++j)
                    for (int i = 1; i <= j; ++i)
                        if (!(face(face(g, i, del), j, eps) == face(face(g, j + 1, eps), i, del)))
                            complain("d" + std::to_string(j) + "^" + std::to_string(eps) + " d" +
                                         std::to_string(i) + "^" + std::to_string(del),
                                     core);
        for (int eps = 0; eps <= 1; ++eps)
            for (int j = 1; j <= n + 1; ++j) {
                CubeElt ej = eta(g, j);
                for (int i = 1; i <= n + 1; ++i) {
                    CubeElt lhs = face(ej, i, eps);
                    CubeElt rhs;
                    if (i < j)
                        rhs = eta(face(g, i, eps), j - 1);
                    else if (i == j)
                        rhs = g;
                    else
                        rhs = eta(face(g, i - 1, eps), j);
                    if (!(lhs == rhs))
                        complain("d" + std::to_string(i) + "^" + std::to_string(eps) + " eta" + std::to_string(j), core);
                }
            }
        for (int j = 1; j <= n + 1; ++j)
            for (int i = 1; i <= j; ++i)
                if (!(eta(eta(g, j), i) == eta(eta(g, i), j + 1)))
                    complain("eta" + std::to_string(i) + " eta" + std::to_string(j), core);
    }
    return bad;
}

void CubicalSet::validate_or_throw() const
{
    for (const auto& [core, flist] : faces_)
        for (size_t k = 0; k < flist.size(); ++k)
            if (flist[k].core.empty())
                throw std::logic_error("missing face " + std::to_string(k) + " on '" + core + "'");
    auto bad = verify_identities();
    if (!bad.empty())
        throw std::logic_error("cubical identities fail: " + bad.front());
}

FreeChainComplex CubicalSet::normalized_chains() const
{
    FreeChainComplex c(-1);
    int top = top_degree();
    for (int d = 0; d <= top; ++d)
        c.set_basis(d, generators(d));
    for (int d = 1; d <= top; ++d)
        for (const auto& g : generators(d)) {
            ChainExpr b;
            CubeElt e = clean_elt(g);
            int64_t sign = -1;
            for (int i = 1; i <= d; ++i, sign = -sign) {
                CubeElt f0 = face(e, i, 0);
                CubeElt f1 = face(e, i, 1);
                if (f0.is_clean() && is_generator(f0.core))
                    chain_add(b, f0.core, sign);
                if (f1.is_clean() && is_generator(f1.core))
                    chain_add(b, f1.core, -sign);
            }
            c.set_boundary(d, g, std::move(b));
        }
    return c;
}

std::vector<CubicalSet::DiagonalTerm> CubicalSet::serre_diagonal_terms(const std::string& gen) const
{
    int n = core_degree(gen);
    std::vector<DiagonalTerm> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        // J = coordinates sent to 0 on the left factor (bits set)
        std::vector<int> J, I;
        for (int k = 1; k <= n; ++k)
            (mask & (1 << (k - 1))) ? J.push_back(k) : I.push_back(k);
        // shuffle sign: parity of (I, J) as a permutation of (1..n); the
        // complementary choice fails the chain-map/coassociativity suite
        int inversions = 0;
        for (int j : J)
            for (int i : I)
                if (i > j)
                    ++inversions;
        CubeElt left = clean_elt(gen);
        for (auto it = J.rbegin(); it != J.rend(); ++it)
            left = face(left, *it, 0);
        CubeElt right = clean_elt(gen);
        for (auto it = I.rbegin(); it != I.rend(); ++it)
            right = face(right, *it, 1);
        if (!left.is_clean() || !right.is_clean())
            continue;
        if (!is_generator(left.core) || !is_generator(right.core))
            continue;
        out.push_back({left.core, right.core, left.degree(), (inversions % 2) ? -1 : 1});
    }
    return out;
}

ChainExpr CubicalSet::serre_diagonal(const std::string& gen) const
{
    ChainExpr out;
    for (const auto& t : serre_diagonal_terms(gen))
        chain_add(out, tensor_label(t.left, t.right), t.coeff);
    return out;
}

std::string CubicalSet::to_json() const
{
    nlohmann::ordered_json j;
    nlohmann::ordered_json dims = nlohmann::ordered_json::object();
    for (const auto& [d, gens] : gens_by_degree_)
        dims[std::to_string(d)] = gens;
    j["dims"] = dims;
    nlohmann::ordered_json faces = nlohmann::ordered_json::object();
    std::vector<std::string> cores = all_cores();
    std::sort(cores.begin(), cores.end());
    for (const auto& core : cores) {
        int d = core_degree(core);
        if (d == 0)
            continue;
        nlohmann::ordered_json fl = nlohmann::ordered_json::array();
        for (int i = 1; i <= d; ++i)
            for (int eps = 0; eps <= 1; ++eps) {
                const CubeElt& f = core_face(core, i, eps);
                fl.push_back(nlohmann::ordered_json::array({i, eps, f.str()}));
            }
        faces[core] = fl;
    }
    j["faces"] = faces;
    return j.dump(2);
}

std::string pair_core_label(const std::string& a, const std::string& b)
{
    return "(" + a + "|" + b + ")";
}

std::pair<std::string, std::string> split_pair_core_label(const std::string& l)
{
    if (l.size() < 3 || l.front() != '(' || l.back() != ')')
        throw std::invalid_argument("not a pair core label: " + l);
    int depth = 0;
    for (size_t i = 1; i + 1 < l.size(); ++i) {
        if (l[i] == '(')
            ++depth;
        else if (l[i] == ')')
            --depth;
        else if (l[i] == '|' && depth == 0) {
            // fiber labels contain '|' inside brackets; base never does
            std::string base = l.substr(1, i - 1);
            if (base.find('[') == std::string::npos)
                return {base, l.substr(i + 1, l.size() - i - 2)};
        }
    }
    throw std::invalid_argument("malformed pair core label: " + l);
}

CubicalSet standard_cube(int n)
{
    if (n < 0)
        throw std::invalid_argument("standard_cube: n >= 0");
    CubicalSet q;
    std::vector<std::string> patterns;
    int total = 1;
    for (int k = 0; k < n; ++k)
        total *= 3;
    for (int code = 0; code < total; ++code) {
        std::string p = "c";
        int c = code;
        int stars = 0;
        for (int k = 0; k < n; ++k) {
            int digit = c % 3;
            c /= 3;
            p += digit == 2 ? '-' : static_cast<char>('0' + digit);
            if (digit == 2)
                ++stars;
        }
        q.add_core(p, stars, true);
        patterns.push_back(p);
    }
    for (const auto& p : patterns) {
        int deg = 0;
        for (char ch : p)
            if (ch == '-')
                ++deg;
        int seen = 0;
        for (size_t k = 1; k < p.size(); ++k) {
            if (p[k] != '-')
                continue;
            ++seen;
            for (int eps = 0; eps <= 1; ++eps) {
                std::string f = p;
                f[k] = static_cast<char>('0' + eps);
                q.set_face(p, seen, eps, CubeElt::clean(f, deg - 1));
            }
        }
    }
    q.validate_or_throw();
    return q;
}

CubicalSet cubical_product(const CubicalSet& a, const CubicalSet& b)
{
    CubicalSet q;
    for (const auto& ca : a.all_cores())
        for (const auto& cb : b.all_cores())
            q.add_core(pair_core_label(ca, cb), a.core_degree(ca) + b.core_degree(cb),
                       a.is_generator(ca) && b.is_generator(cb));
    auto make_pair_elt = [&](const CubeElt& ea, const CubeElt& eb) {
        CubeElt out;
        out.core = pair_core_label(ea.core, eb.core);
        out.gaps = ea.gaps;
        out.gaps.back() += eb.gaps.front();
        out.gaps.insert(out.gaps.end(), eb.gaps.begin() + 1, eb.gaps.end());
        return out;
    };
    for (const auto& ca : a.all_cores())
        for (const auto& cb : b.all_cores()) {
            int p = a.core_degree(ca), r = b.core_degree(cb);
            const std::string label = pair_core_label(ca, cb);
            for (int i = 1; i <= p; ++i)
                for (int eps = 0; eps <= 1; ++eps)
                    q.set_face(label, i, eps, make_pair_elt(a.core_face(ca, i, eps), b.clean_elt(cb)));
            for (int i = 1; i <= r; ++i)
                for (int eps = 0; eps <= 1; ++eps)
                    q.set_face(label, p + i, eps, make_pair_elt(a.clean_elt(ca), b.core_face(cb, i, eps)));
        }
    return q;
}

CubeElt MonoidalCubicalSet::mult(const CubeElt& a, const CubeElt& b) const
{
    CubeElt m = mult_cores(a.core, b.core);
    std::vector<int> outer = a.gaps;
    outer.back() += b.gaps.front();
    outer.insert(outer.end(), b.gaps.begin() + 1, b.gaps.end());
    return graft(outer, m);
}

std::vector<std::string> MonoidalCubicalSet::verify_monoidal(int max_degree) const
{
    std::vector<std::string> bad;
    std::vector<std::string> cores;
    for (const auto& c : set.all_cores())
        if (set.core_degree(c) <= max_degree)
            cores.push_back(c);
    CubeElt e = set.clean_elt(unit);
    for (const auto& c : cores) {
        CubeElt x = set.clean_elt(c);
        if (!(mult(e, x) == x) || !(mult(x, e) == x))
            bad.push_back("unit law fails on " + c);
    }
    for (const auto& c1 : cores)
        for (const auto& c2 : cores) {
            int p = set.core_degree(c1), r = set.core_degree(c2);
            if (p + r > max_degree)
                continue;
            CubeElt x = set.clean_elt(c1), y = set.clean_elt(c2);
            CubeElt xy = mult(x, y);
            for (int i = 1; i <= p + r; ++i)
                for (int eps = 0; eps <= 1; ++eps) {
                    CubeElt lhs = set.face(xy, i, eps);
                    CubeElt rhs = i <= p ? mult(set.face(x, i, eps), y) : mult(x, set.face(y, i - p, eps));
                    if (!(lhs == rhs))
                        bad.push_back("product not cubical at d" + std::to_string(i) + "^" +
                                      std::to_string(eps) + " on " + c1 + "," + c2);
                }
            for (const auto& c3 : cores) {
                if (p + r + set.core_degree(c3) > max_degree)
                    continue;
                CubeElt z = set.clean_elt(c3);
                if (!(mult(mult(x, y), z) == mult(x, mult(y, z))))
                    bad.push_back("associativity fails on " + c1 + "," + c2 + "," + c3);
            }
        }
    return bad;
}

int BlockWord::dimension() const
{
    std::set<int> distinct;
    for (const auto& b : blocks)
        distinct.insert(b.begin(), b.end());
    return static_cast<int>(distinct.size()) - static_cast<int>(blocks.size()) + (open_first ? 0 : -1);
}

bool BlockWord::valid() const
{
    if (blocks.empty())
        return false;
    for (const auto& b : blocks) {
        if (b.empty())
            return false;
        for (size_t k = 0; k + 1 < b.size(); ++k)
            if (b[k] >= b[k + 1])
                return false;
    }
    for (size_t t = 0; t + 1 < blocks.size(); ++t)
        if (blocks[t].back() != blocks[t + 1].front())
            return false;
    return true;
}

std::string BlockWord::str() const
{
    std::string out;
    for (size_t t = 0; t < blocks.size(); ++t) {
        out += (t == 0 && open_first) ? "" : "[";
        for (size_t k = 0; k < blocks[t].size(); ++k) {
            if (k)
                out += ",";
            out += std::to_string(blocks[t][k]);
        }
        out += "]";
    }
    return out;
}

BlockWord BlockWord::top(int n_plus_1, bool open_first)
{
    BlockWord b;
    b.open_first = open_first;
    std::vector<int> all(n_plus_1 + 1);
    std::iota(all.begin(), all.end(), 0);
    b.blocks.push_back(all);
    return b;
}

/* coordinate i of the face: for a closed word, the i-th strictly interior
 * element over all blocks; with an open first block, that block contributes
 * every element but its last. */
static std::pair<size_t, size_t> locate_coordinate(const BlockWord& b, int i)
{
    int count = 0;
    for (size_t t = 0; t < b.blocks.size(); ++t) {
        size_t lo = (t == 0 && b.open_first) ? 0 : 1;
        size_t hi = b.blocks[t].size() - 1; // exclusive of the last element
        for (size_t k = lo; k < hi; ++k)
            if (++count == i)
                return {t, k};
    }
    throw std::out_of_range("block word coordinate " + std::to_string(i) + " out of range");
}

BlockWord block_face(const BlockWord& b, int i, int eps)
{
    if (!b.valid())
        throw std::invalid_argument("invalid block word");
    if (i < 1 || i > b.dimension())
        throw std::out_of_range("block face index out of range");
    auto [t, k] = locate_coordinate(b, i);
    BlockWord out = b;
    if (eps == 1) {
        out.blocks[t].erase(out.blocks[t].begin() + k);
    } else {
        std::vector<int> first(b.blocks[t].begin(), b.blocks[t].begin() + k + 1);
        std::vector<int> second(b.blocks[t].begin() + k, b.blocks[t].end());
        out.blocks[t] = first;
        out.blocks.insert(out.blocks.begin() + t + 1, second);
    }
    return out;
}

std::vector<int> psi_projection(const BlockWord& b)
{
    if (!b.valid())
        throw std::invalid_argument("invalid block word");
    return b.blocks.front();
}

std::string block_word_to_json(const BlockWord& b)
{
    nlohmann::ordered_json j;
    j["blocks"] = b.blocks;
    j["open"] = b.open_first;
    return j.dump();
}

BlockWord block_word_from_json(const std::string& text)
{
    nlohmann::json j = nlohmann::json::parse(text);
    BlockWord b;
    b.open_first = j.at("open").get<bool>();
    for (const auto& bl : j.at("blocks"))
        b.blocks.push_back(bl.get<std::vector<int>>());
    if (!b.valid())
        throw std::invalid_argument("invalid block word in JSON");
    return b;
}

} // namespace cubar
