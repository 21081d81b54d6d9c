#include "cubar/simplicial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cubar {

std::string SimplexExpr::str() const
{
    std::string out;
    for (int i : word)
        out += "s" + std::to_string(i);
    return out.empty() ? gen : out + "." + gen;
}

SimplexExpr parse_simplex_expr(const std::string& s)
{
    SimplexExpr e;
    size_t pos = 0;
    std::vector<int> word;
    while (pos < s.size() && s[pos] == 's') {
        size_t q = pos + 1, val = 0;
        bool any = false;
        while (q < s.size() && isdigit(static_cast<unsigned char>(s[q]))) {
            val = val * 10 + (s[q] - '0');
            ++q;
            any = true;
        }
        if (!any)
            break;
        if (q < s.size() && (s[q] == 's' || s[q] == '.')) {
            word.push_back(static_cast<int>(val));
            pos = q;
            if (s[pos] == '.') {
                ++pos;
                break;
            }
        } else {
            // trailing "s<digits>" with no separator: it is the generator name
            break;
        }
    }
    e.word = word;
    e.gen = s.substr(pos);
    if (e.gen.empty())
        throw std::invalid_argument("empty generator in simplex expression '" + s + "'");
    return e;
}

void SimplicialSet::add_generator(const std::string& name, int dim)
{
    if (dims_.count(name))
        throw std::invalid_argument("duplicate simplicial generator '" + name + "'");
    if (name.empty() || name.find_first_of("|[]()<>{}. \t\n") != std::string::npos ||
        (name[0] == 's' && name.size() > 1 && isdigit(static_cast<unsigned char>(name[1]))))
        throw std::invalid_argument("generator name '" + name + "' clashes with expression syntax");
    dims_[name] = dim;
    auto& v = by_dim_[dim];
    v.insert(std::lower_bound(v.begin(), v.end(), name), name);
}

void SimplicialSet::set_face(const std::string& gen, int i, SimplexExpr value)
{
    int d = gen_dim(gen);
    if (d <= 0 || i < 0 || i > d)
        throw std::out_of_range("face index " + std::to_string(i) + " out of range for '" + gen + "'");
    faces_[{gen, i}] = std::move(value);
}

void SimplicialSet::set_basepoint(const std::string& name)
{
    if (gen_dim(name) != 0)
        throw std::invalid_argument("basepoint must be a 0-generator");
    basepoint_ = name;
}

int SimplicialSet::gen_dim(const std::string& name) const
{
    auto it = dims_.find(name);
    if (it == dims_.end())
        throw std::out_of_range("unknown simplicial generator '" + name + "'");
    return it->second;
}

int SimplicialSet::top_dim() const
{
    return by_dim_.empty() ? -1 : by_dim_.rbegin()->first;
}

const std::vector<std::string>& SimplicialSet::generators(int dim) const
{
    static const std::vector<std::string> empty;
    auto it = by_dim_.find(dim);
    return it == by_dim_.end() ? empty : it->second;
}

SimplexExpr SimplicialSet::basepoint_expr(int dim) const
{
    if (basepoint_.empty())
        throw std::logic_error("no basepoint set");
    SimplexExpr e;
    e.gen = basepoint_;
    for (int i = dim - 1; i >= 0; --i)
        e.word.push_back(i);
    return e;
}

SimplexExpr SimplicialSet::apply_s(int i, SimplexExpr e) const
{
    int d = dim_of(e);
    if (i < 0 || i > d)
        throw std::out_of_range("s_" + std::to_string(i) + " out of range on dim " + std::to_string(d));
    // s_i s_j = s_{j+1} s_i for i <= j; word is strictly decreasing outermost-first
    std::vector<int> out;
    size_t k = 0;
    while (k < e.word.size() && i <= e.word[k]) {
        out.push_back(e.word[k] + 1);
        ++k;
    }
    out.push_back(i);
    for (; k < e.word.size(); ++k)
        out.push_back(e.word[k]);
    e.word = std::move(out);
    return e;
}

SimplexExpr SimplicialSet::apply_face(int i, SimplexExpr e) const
{
    int d = dim_of(e);
    if (d == 0 || i < 0 || i > d)
        throw std::out_of_range("face d" + std::to_string(i) + " out of range on dim " + std::to_string(d));
    if (e.word.empty()) {
        auto it = faces_.find({e.gen, i});
        if (it == faces_.end())
            throw std::logic_error("missing face table entry (" + e.gen + "," + std::to_string(i) + ")");
        return it->second;
    }
    int h = e.word.front();
    SimplexExpr inner = e;
    inner.word.erase(inner.word.begin());
    if (i == h || i == h + 1)
        return inner;
    if (i < h)
        return apply_s(h - 1, apply_face(i, std::move(inner)));
    return apply_s(h, apply_face(i - 1, std::move(inner)));
}

SimplexExpr SimplicialSet::normalize_simplex(const std::vector<std::string>& op_word,
                                             const std::string& gen) const
{
    SimplexExpr e;
    e.gen = gen;
    (void)gen_dim(gen);
    for (auto it = op_word.rbegin(); it != op_word.rend(); ++it) {
        const std::string& op = *it;
        if (op.size() < 2 || (op[0] != 's' && op[0] != 'd'))
            throw std::invalid_argument("bad operator '" + op + "'");
        int i = std::stoi(op.substr(1));
        e = op[0] == 's' ? apply_s(i, std::move(e)) : apply_face(i, std::move(e));
    }
    return e;
}

SimplexExpr SimplicialSet::front_face(const SimplexExpr& e, int lo_dim) const
{
    int n = dim_of(e);
    SimplexExpr out = e;
    for (int i = n; i > lo_dim; --i)
        out = apply_face(i, std::move(out));
    return out;
}

SimplexExpr SimplicialSet::back_face(const SimplexExpr& e, int hi_dim) const
{
    int n = dim_of(e);
    SimplexExpr out = e;
    for (int i = n - hi_dim - 1; i >= 0; --i)
        out = apply_face(i, std::move(out));
    return out;
}

std::pair<SimplexExpr, SimplexExpr> SimplicialSet::aw_components(const SimplexExpr& e, int i) const
{
    int n = dim_of(e);
    if (i < 0 || i > n)
        throw std::out_of_range("aw component index out of range");
    return {front_face(e, i), back_face(e, n - i)};
}

SimplexExpr SimplicialSet::vertex_face(const SimplexExpr& e, const std::vector<int>& keep) const
{
    int n = dim_of(e);
    SimplexExpr out = e;
    for (int i = n; i >= 0; --i)
        if (!std::binary_search(keep.begin(), keep.end(), i))
            out = apply_face(i, std::move(out));
    return out;
}

std::vector<std::string> SimplicialSet::verify_identities() const
{
    std::vector<std::string> bad;
    for (const auto& [gen, d] : dims_) {
        if (d < 2)
            continue;
        SimplexExpr e{{}, gen};
        for (int j = 1; j <= d; ++j)
            for (int i = 0; i < j; ++i) {
                SimplexExpr lhs = apply_face(i, apply_face(j, e));
                SimplexExpr rhs = apply_face(j - 1, apply_face(i, e));
                if (!(lhs == rhs))
                    bad.push_back("d" + std::to_string(i) + " d" + std::to_string(j) + " (" + gen + "): " +
                                  lhs.str() + " != " + rhs.str());
            }
    }
    return bad;
}

void SimplicialSet::validate_or_throw() const
{
    for (const auto& [gd, f] : faces_) {
        int want = gen_dim(gd.first) - 1;
        if (dim_of(f) != want)
            throw std::logic_error("face (" + gd.first + "," + std::to_string(gd.second) + ") has dim " +
                                   std::to_string(dim_of(f)) + ", expected " + std::to_string(want));
    }
    for (const auto& [gen, d] : dims_)
        for (int i = 0; i <= d && d > 0; ++i)
            if (!faces_.count({gen, i}))
                throw std::logic_error("missing face (" + gen + "," + std::to_string(i) + ")");
    auto bad = verify_identities();
    if (!bad.empty())
        throw std::logic_error("simplicial identities fail: " + bad.front());
}

int SimplicialSet::reduced_level() const
{
    if (basepoint_.empty() || generators(0).size() != 1)
        return -1;
    int level = 0;
    for (int d = 1; d <= top_dim() + 1; ++d) {
        if (!generators(d).empty())
            break;
        level = d;
    }
    return level;
}

FreeChainComplex SimplicialSet::normalized_chains() const
{
    FreeChainComplex c(-1);
    int top = top_dim();
    for (int d = 0; d <= top; ++d) {
        std::vector<std::string> labels = generators(d);
        if (d == 0) {
            // reduced at the basepoint only when 1-reduced models ask for it;
            // keep full degree-0 basis (quotient by C(*) only kills positive degrees)
        }
        c.set_basis(d, labels);
    }
    for (int d = 1; d <= top; ++d)
        for (const auto& g : generators(d)) {
            ChainExpr b;
            int64_t sign = 1;
            for (int i = 0; i <= d; ++i, sign = -sign) {
                SimplexExpr f = apply_face(i, SimplexExpr{{}, g});
                if (!f.degenerate())
                    chain_add(b, f.gen, sign);
            }
            c.set_boundary(d, g, std::move(b));
        }
    return c;
}

ChainExpr SimplicialSet::aw_diagonal(const std::string& gen) const
{
    int n = gen_dim(gen);
    ChainExpr out;
    SimplexExpr e{{}, gen};
    for (int i = 0; i <= n; ++i) {
        auto [front, back] = aw_components(e, i);
        if (!front.degenerate() && !back.degenerate())
            chain_add(out, tensor_label(front.gen, back.gen), 1);
    }
    return out;
}

std::string SimplicialSet::to_json() const
{
    nlohmann::ordered_json j;
    nlohmann::ordered_json dims = nlohmann::ordered_json::object();
    for (const auto& [d, gens] : by_dim_)
        dims[std::to_string(d)] = gens;
    j["dims"] = dims;
    nlohmann::ordered_json faces = nlohmann::ordered_json::object();
    for (const auto& [d, gens] : by_dim_) {
        if (d == 0)
            continue;
        for (const auto& g : gens) {
            nlohmann::ordered_json fl = nlohmann::ordered_json::array();
            for (int i = 0; i <= d; ++i) {
                const SimplexExpr& f = faces_.at({g, i});
                nlohmann::ordered_json word = nlohmann::ordered_json::array();
                for (int s : f.word)
                    word.push_back("s" + std::to_string(s));
                fl.push_back(nlohmann::ordered_json::array({word, f.gen}));
            }
            faces[g] = fl;
        }
    }
    j["faces"] = faces;
    j["basepoint"] = basepoint_;
    return j.dump(2);
}

SimplicialSet SimplicialSet::from_json(const std::string& text)
{
    nlohmann::json j = nlohmann::json::parse(text);
    SimplicialSet x;
    for (const auto& [dstr, gens] : j.at("dims").items())
        for (const auto& g : gens)
            x.add_generator(g.get<std::string>(), std::stoi(dstr));
    if (j.contains("faces"))
        for (const auto& [g, fl] : j.at("faces").items()) {
            int d = x.gen_dim(g);
            if (static_cast<int>(fl.size()) != d + 1)
                throw std::invalid_argument("face list for '" + g + "' must have " + std::to_string(d + 1) + " entries");
            for (int i = 0; i <= d; ++i) {
                const auto& pair = fl.at(i);
                SimplexExpr e;
                e.gen = pair.at(1).get<std::string>();
                std::vector<int> word;
                for (const auto& w : pair.at(0))
                    word.push_back(std::stoi(w.get<std::string>().substr(1)));
                // accept any order; re-apply for normal form
                SimplexExpr norm{{}, e.gen};
                for (auto it = word.rbegin(); it != word.rend(); ++it)
                    norm = x.apply_s(*it, std::move(norm));
                x.set_face(g, i, norm);
            }
        }
    x.set_basepoint(j.at("basepoint").get<std::string>());
    x.validate_or_throw();
    return x;
}

SimplicialSet standard_simplex(int n)
{
    if (n < 0)
        throw std::invalid_argument("standard_simplex: n >= 0 required");
    SimplicialSet x;
    std::vector<std::vector<int>> subsets;
    for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
        std::vector<int> s;
        for (int v = 0; v <= n; ++v)
            if (mask & (1 << v))
                s.push_back(v);
        subsets.push_back(s);
    }
    auto name = [](const std::vector<int>& s) {
        std::string out = "v";
        for (int v : s)
            out += std::to_string(v);
        return out;
    };
    for (const auto& s : subsets)
        x.add_generator(name(s), static_cast<int>(s.size()) - 1);
    for (const auto& s : subsets)
        for (size_t i = 0; i < s.size() && s.size() > 1; ++i) {
            std::vector<int> f = s;
            f.erase(f.begin() + i);
            x.set_face(name(s), static_cast<int>(i), SimplexExpr{{}, name(f)});
        }
    x.set_basepoint("v0");
    x.validate_or_throw();
    return x;
}

SimplicialSet minimal_sphere(int n)
{
    if (n < 1)
        throw std::invalid_argument("minimal_sphere: n >= 1 required");
    return wedge_of_spheres({{"sigma", n}});
}

SimplicialSet wedge_of_spheres(const std::vector<std::pair<std::string, int>>& cells)
{
    SimplicialSet x;
    x.add_generator("*", 0);
    for (const auto& [name, n] : cells)
        x.add_generator(name, n);
    x.set_basepoint("*");
    for (const auto& [name, n] : cells)
        for (int i = 0; i <= n; ++i)
            x.set_face(name, i, x.basepoint_expr(n - 1));
    x.validate_or_throw();
    return x;
}

SimplicialSet suspension(const SimplicialSet& k)
{
    if (k.top_dim() < 0)
        throw std::invalid_argument("suspension of the empty simplicial set");
    if (k.basepoint().empty())
        throw std::invalid_argument("suspension requires a pointed input");
    SimplicialSet s;
    s.add_generator("*", 0);
    s.set_basepoint("*");
    for (int d = 0; d <= k.top_dim(); ++d)
        for (const auto& g : k.generators(d))
            if (g != k.basepoint())
                s.add_generator("^" + g, d + 1);

    // hat of an expression of K: shift degeneracies, collapse basepoint cells
    auto hat = [&](const SimplexExpr& e) -> SimplexExpr {
        if (k.is_basepoint_expr(e))
            return s.basepoint_expr(k.dim_of(e) + 1);
        SimplexExpr out;
        out.gen = "^" + e.gen;
        for (int w : e.word)
            out.word.push_back(w + 1);
        return out;
    };

    for (int d = 0; d <= k.top_dim(); ++d)
        for (const auto& g : k.generators(d)) {
            if (g == k.basepoint())
                continue;
            const std::string hg = "^" + g;
            s.set_face(hg, 0, s.basepoint_expr(d));
            if (d == 0) {
                s.set_face(hg, 1, SimplexExpr{{}, "*"});
                continue;
            }
            for (int i = 0; i <= d; ++i)
                s.set_face(hg, i + 1, hat(k.apply_face(i, SimplexExpr{{}, g})));
        }
    s.validate_or_throw();
    return s;
}

} // namespace cubar
