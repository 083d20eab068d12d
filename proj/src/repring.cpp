#include "ktdual/repring.hpp"

#include <algorithm>
#include <sstream>

namespace ktdual {

namespace {

void require_same_group(const VirtualCharacter& a, const VirtualCharacter& b) {
    if (a.group() != b.group())
        throw UserError("group mismatch: '" + a.group()->name() + "' vs '" + b.group()->name() + "'");
}

} // namespace

VirtualCharacter::VirtualCharacter(GroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
    if (!group_) throw UserError("class function needs a group");
    if (static_cast<int>(values_.size()) != group_->num_classes())
        throw UserError("class function on '" + group_->name() + "' needs " +
                        std::to_string(group_->num_classes()) + " values, got " +
                        std::to_string(values_.size()));
}

VirtualCharacter VirtualCharacter::zero(const GroupPtr& g) {
    return VirtualCharacter(g, std::vector<Cyclotomic>(static_cast<size_t>(g->num_classes())));
}

VirtualCharacter VirtualCharacter::trivial(const GroupPtr& g) {
    return VirtualCharacter(g, std::vector<Cyclotomic>(static_cast<size_t>(g->num_classes()), Cyclotomic(1)));
}

VirtualCharacter VirtualCharacter::irreducible(const GroupPtr& g, int index) {
    if (index < 0 || index >= g->num_irreducibles())
        throw UserError("irreducible index " + std::to_string(index) + " out of range for '" + g->name() + "'");
    return VirtualCharacter(g, g->irreducibles()[static_cast<size_t>(index)]);
}

VirtualCharacter VirtualCharacter::from_multiplicities(const GroupPtr& g, const std::vector<long>& mult) {
    if (static_cast<int>(mult.size()) != g->num_irreducibles())
        throw UserError("multiplicity vector length mismatch for '" + g->name() + "'");
    VirtualCharacter acc = zero(g);
    for (size_t i = 0; i < mult.size(); ++i) {
        if (mult[i] == 0) continue;
        acc += irreducible(g, static_cast<int>(i)) * Cyclotomic(mult[i]);
    }
    return acc;
}

bool VirtualCharacter::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Cyclotomic& v) { return v.is_zero(); });
}

const Cyclotomic& VirtualCharacter::dim() const {
    return values_[static_cast<size_t>(group_->identity_class())];
}

VirtualCharacter VirtualCharacter::operator-() const {
    VirtualCharacter r = *this;
    for (auto& v : r.values_) v = -v;
    return r;
}

VirtualCharacter& VirtualCharacter::operator+=(const VirtualCharacter& o) {
    require_same_group(*this, o);
    for (size_t c = 0; c < values_.size(); ++c) values_[c] += o.values_[c];
    return *this;
}

VirtualCharacter& VirtualCharacter::operator-=(const VirtualCharacter& o) {
    require_same_group(*this, o);
    for (size_t c = 0; c < values_.size(); ++c) values_[c] -= o.values_[c];
    return *this;
}

VirtualCharacter& VirtualCharacter::operator*=(const VirtualCharacter& o) {
    require_same_group(*this, o);
    for (size_t c = 0; c < values_.size(); ++c) values_[c] *= o.values_[c];
    return *this;
}

VirtualCharacter& VirtualCharacter::operator*=(const Cyclotomic& s) {
    for (auto& v : values_) v *= s;
    return *this;
}

bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
    return a.group_ == b.group_ && a.values_ == b.values_;
}

std::string VirtualCharacter::str() const {
    auto mult = integral_multiplicities(*this);
    if (!mult) {
        std::ostringstream out;
        out << "[";
        for (size_t c = 0; c < values_.size(); ++c) out << (c ? ", " : "") << values_[c].str();
        out << "]";
        return out.str();
    }
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < mult->size(); ++i) {
        long m = (*mult)[i];
        if (m == 0) continue;
        long a = std::abs(m);
        if (first) {
            if (m < 0) out << "-";
            first = false;
        } else {
            out << (m < 0 ? " - " : " + ");
        }
        bool triv = group_->irreducible_label(static_cast<int>(i)) == "triv";
        if (triv) {
            out << a;
        } else {
            if (a != 1) out << a << "*";
            out << group_->irreducible_label(static_cast<int>(i));
        }
    }
    if (first) return "0";
    return out.str();
}

VirtualCharacter tensor(const VirtualCharacter& a, const VirtualCharacter& b) { return a * b; }

VirtualCharacter dual(const VirtualCharacter& a) {
    const GroupPtr& g = a.group();
    std::vector<Cyclotomic> vals(static_cast<size_t>(g->num_classes()));
    for (int c = 0; c < g->num_classes(); ++c)
        vals[static_cast<size_t>(c)] = a.value(g->class_of_power(c, g->exponent() - 1));
    return VirtualCharacter(g, std::move(vals));
}

VirtualCharacter adams(const VirtualCharacter& a, long k) {
    const GroupPtr& g = a.group();
    std::vector<Cyclotomic> vals(static_cast<size_t>(g->num_classes()));
    for (int c = 0; c < g->num_classes(); ++c)
        vals[static_cast<size_t>(c)] = a.value(g->class_of_power(c, k));
    return VirtualCharacter(g, std::move(vals));
}

VirtualCharacter exterior(const VirtualCharacter& a, long k) {
    if (k < 0) throw UserError("exterior power index must be non-negative");
    if (!is_virtual(a)) throw UserError("exterior power of a class function outside R(G)");
    const GroupPtr& g = a.group();
    std::vector<VirtualCharacter> lam{VirtualCharacter::trivial(g)};
    lam.reserve(static_cast<size_t>(k) + 1);
    for (long j = 1; j <= k; ++j) {
        VirtualCharacter acc = VirtualCharacter::zero(g);
        for (long m = 1; m <= j; ++m) {
            VirtualCharacter term = adams(a, m) * lam[static_cast<size_t>(j - m)];
            if (m % 2 == 0) term = -term;
            acc += term;
        }
        acc *= Cyclotomic(make_rational(1, j));
        if (!is_virtual(acc))
            throw InternalError("Newton's identity produced a non-integral lambda^" + std::to_string(j));
        lam.push_back(std::move(acc));
    }
    return lam[static_cast<size_t>(k)];
}

VirtualCharacter det_rep(const VirtualCharacter& v) {
    long n = genuine_dim(v);
    if (n < 1) throw UserError("determinant character needs dimension >= 1");
    return exterior(v, n);
}

VirtualCharacter restrict_to(const VirtualCharacter& a, const SubgroupEmbedding& e) {
    if (a.group() != e.ambient)
        throw UserError("restriction: character lives on '" + a.group()->name() + "', embedding expects '" +
                        e.ambient->name() + "'");
    std::vector<Cyclotomic> vals;
    vals.reserve(e.class_map.size());
    for (int c : e.class_map) vals.push_back(a.value(c));
    return VirtualCharacter(e.subgroup, std::move(vals));
}

Cyclotomic inner_product(const VirtualCharacter& a, const VirtualCharacter& b) {
    require_same_group(a, b);
    const GroupPtr& g = a.group();
    Cyclotomic acc;
    for (int c = 0; c < g->num_classes(); ++c)
        acc += Cyclotomic(Rational(g->cls(c).size)) * a.value(c) * b.value(c).conj();
    acc *= Cyclotomic(make_rational(1, g->order()));
    return acc;
}

std::vector<Cyclotomic> multiplicities(const VirtualCharacter& a) {
    const GroupPtr& g = a.group();
    std::vector<Cyclotomic> out;
    out.reserve(static_cast<size_t>(g->num_irreducibles()));
    for (int i = 0; i < g->num_irreducibles(); ++i)
        out.push_back(inner_product(a, VirtualCharacter::irreducible(g, i)));
    return out;
}

std::optional<std::vector<long>> integral_multiplicities(const VirtualCharacter& a) {
    std::vector<long> out;
    for (const Cyclotomic& m : multiplicities(a)) {
        if (!m.is_integer()) return std::nullopt;
        out.push_back(to_long(*m.as_rational()));
    }
    return out;
}

bool is_virtual(const VirtualCharacter& a) { return integral_multiplicities(a).has_value(); }

bool is_genuine(const VirtualCharacter& a) {
    auto mult = integral_multiplicities(a);
    if (!mult) return false;
    return std::all_of(mult->begin(), mult->end(), [](long m) { return m >= 0; });
}

long genuine_dim(const VirtualCharacter& v) {
    if (!is_genuine(v))
        throw UserError("expected a genuine character on '" + v.group()->name() + "', got " + v.str());
    return to_long(*v.dim().as_rational());
}

std::vector<VirtualCharacter> abelian_line_decomposition(const VirtualCharacter& v) {
    const GroupPtr& g = v.group();
    if (!g->is_abelian())
        throw UserError("'" + g->name() + "' is not abelian: no decomposition into 1-dimensional summands");
    auto mult = integral_multiplicities(v);
    if (!mult || std::any_of(mult->begin(), mult->end(), [](long m) { return m < 0; }))
        throw UserError("not a genuine character: " + v.str());
    std::vector<VirtualCharacter> lines;
    for (size_t i = 0; i < mult->size(); ++i)
        for (long r = 0; r < (*mult)[i]; ++r) lines.push_back(VirtualCharacter::irreducible(g, static_cast<int>(i)));
    return lines;
}

VirtualCharacter parse_rep(const GroupPtr& g, const std::string& spec) {
    std::string s;
    for (char ch : spec)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw UserError("empty representation spec");

    VirtualCharacter acc = VirtualCharacter::zero(g);
    size_t pos = 0;
    while (pos < s.size()) {
        long sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1;
            ++pos;
        }
        size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string term = s.substr(pos, end - pos);
        if (term.empty()) throw UserError("malformed representation spec '" + spec + "'");
        long count = 1;
        std::string label = term;
        size_t star = term.find('*');
        if (star != std::string::npos) {
            try {
                count = std::stol(term.substr(0, star));
            } catch (const std::exception&) {
                throw UserError("bad multiplicity in representation term '" + term + "'");
            }
            label = term.substr(star + 1);
        } else if (std::all_of(term.begin(), term.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            count = std::stol(term);
            label = "triv";
        }
        if (label.empty()) throw UserError("missing label in representation term '" + term + "'");
        acc += VirtualCharacter::irreducible(g, g->find_irreducible(label)) * Cyclotomic(sign * count);
        pos = end;
    }
    return acc;
}

void to_json(nlohmann::json& j, const VirtualCharacter& a) {
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : a.values()) vals.push_back(nlohmann::json(v));
    j = nlohmann::json{{"group", a.group()->name()}, {"values", vals}, {"display", a.str()}};
}

} // namespace ktdual
