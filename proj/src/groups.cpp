#include "ktdual/groups.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

namespace ktdual {

namespace {

long lmod(long k, long n) {
    long r = k % n;
    return r < 0 ? r + n : r;
}

std::string row_name(const FiniteGroupData& g, int i) {
    return "'" + g.irreducible_label(i) + "' (row " + std::to_string(i) + ")";
}

} // namespace

FiniteGroupData::FiniteGroupData(std::string name, long order, long exponent,
                                 std::vector<ConjugacyClass> classes,
                                 std::vector<std::vector<Cyclotomic>> irreducibles,
                                 std::vector<std::string> irreducible_labels,
                                 std::map<std::string, int> label_aliases)
    : name_(std::move(name)),
      order_(order),
      exponent_(exponent),
      classes_(std::move(classes)),
      irreducibles_(std::move(irreducibles)),
      irreducible_labels_(std::move(irreducible_labels)),
      label_aliases_(std::move(label_aliases)) {
    if (!classes_.empty() && !classes_[0].power_map.empty())
        identity_class_ = classes_[0].power_map[0];
    validate();
}

int FiniteGroupData::class_of_power(int c, long k) const {
    return classes_[static_cast<size_t>(c)].power_map[static_cast<size_t>(lmod(k, exponent_))];
}

long FiniteGroupData::irreducible_dim(int irr) const {
    const Cyclotomic& v = character_value(irr, identity_class_);
    auto q = v.as_rational();
    if (!q || !is_integer(*q)) throw UserError("group '" + name_ + "': dimension of " + row_name(*this, irr) + " is not an integer");
    return to_long(*q);
}

int FiniteGroupData::find_irreducible(const std::string& label) const {
    for (size_t i = 0; i < irreducible_labels_.size(); ++i)
        if (irreducible_labels_[i] == label) return static_cast<int>(i);
    auto it = label_aliases_.find(label);
    if (it != label_aliases_.end()) return it->second;
    static const std::regex chi_re("^chi([0-9]+)$");
    std::smatch m;
    if (std::regex_match(label, m, chi_re)) {
        int idx = std::stoi(m[1]);
        if (idx < num_irreducibles()) return idx;
    }
    std::ostringstream msg;
    msg << "group '" << name_ << "' has no irreducible labelled '" << label << "'; available:";
    for (const auto& l : irreducible_labels_) msg << " " << l;
    throw UserError(msg.str());
}

bool FiniteGroupData::is_abelian() const { return static_cast<long>(classes_.size()) == order_; }

void FiniteGroupData::validate() const {
    auto fail = [&](const std::string& what) { throw UserError("group '" + name_ + "': " + what); };

    if (order_ < 1) fail("order must be positive");
    if (exponent_ < 1) fail("exponent must be positive");
    if (classes_.empty()) fail("no conjugacy classes");
    if (irreducibles_.size() != classes_.size())
        fail("character table is not square: " + std::to_string(irreducibles_.size()) + " rows for " +
             std::to_string(classes_.size()) + " classes");
    if (irreducible_labels_.size() != irreducibles_.size()) fail("irreducible label count mismatch");

    long size_sum = 0;
    for (size_t c = 0; c < classes_.size(); ++c) {
        const auto& cls = classes_[c];
        if (cls.size < 1) fail("class '" + cls.label + "' has non-positive size");
        size_sum += cls.size;
        if (static_cast<long>(cls.power_map.size()) != exponent_)
            fail("class '" + cls.label + "': power map has length " + std::to_string(cls.power_map.size()) +
                 ", expected the exponent " + std::to_string(exponent_));
        for (int t : cls.power_map)
            if (t < 0 || t >= static_cast<int>(classes_.size()))
                fail("class '" + cls.label + "': power map entry out of range");
        if (cls.power_map.size() > 1 && cls.power_map[1] != static_cast<int>(c))
            fail("class '" + cls.label + "': power map at k=1 is not the class itself");
    }
    if (size_sum != order_)
        fail("class sizes sum to " + std::to_string(size_sum) + ", not the order " + std::to_string(order_));

    // identity
    int id = identity_class_;
    if (id < 0 || id >= static_cast<int>(classes_.size())) fail("cannot locate identity class");
    for (const auto& cls : classes_)
        if (cls.power_map[0] != id) fail("class '" + cls.label + "': power map at k=0 is not the identity class");
    if (classes_[static_cast<size_t>(id)].size != 1) fail("identity class has size != 1");

    // power-map coherence at the class level
    for (size_t c = 0; c < classes_.size(); ++c)
        for (long j = 0; j < exponent_; ++j)
            for (long k = 0; k < exponent_; ++k) {
                int lhs = classes_[static_cast<size_t>(classes_[c].power_map[static_cast<size_t>(j)])]
                              .power_map[static_cast<size_t>(k)];
                int rhs = classes_[c].power_map[static_cast<size_t>(lmod(j * k, exponent_))];
                if (lhs != rhs)
                    fail("class '" + classes_[c].label + "': power map incoherent at j=" + std::to_string(j) +
                         ", k=" + std::to_string(k));
            }

    // character values and dimensions
    long dim_sq_sum = 0;
    for (size_t i = 0; i < irreducibles_.size(); ++i) {
        if (irreducibles_[i].size() != classes_.size())
            fail(row_name(*this, static_cast<int>(i)) + " has wrong number of values");
        for (size_t c = 0; c < classes_.size(); ++c)
            if (exponent_ % irreducibles_[i][c].conductor() != 0)
                fail(row_name(*this, static_cast<int>(i)) + ": value at class '" + classes_[c].label +
                     "' does not lie in Q(zeta_" + std::to_string(exponent_) + ")");
        const Cyclotomic& d = irreducibles_[i][static_cast<size_t>(id)];
        auto q = d.as_rational();
        if (!q || !is_integer(*q) || *q < 1)
            fail(row_name(*this, static_cast<int>(i)) + ": dimension is not a positive integer");
        long dim = to_long(*q);
        dim_sq_sum += dim * dim;
    }
    if (dim_sq_sum != order_)
        fail("sum of squared dimensions is " + std::to_string(dim_sq_sum) + ", not the order " +
             std::to_string(order_));

    // row orthogonality: (1/|G|) sum_c size(c) chi_i(c) conj(chi_j(c)) = delta_ij
    Rational inv_order(1, order_);
    for (size_t i = 0; i < irreducibles_.size(); ++i)
        for (size_t j = i; j < irreducibles_.size(); ++j) {
            Cyclotomic acc;
            for (size_t c = 0; c < classes_.size(); ++c)
                acc += Cyclotomic(Rational(classes_[c].size)) * irreducibles_[i][c] * irreducibles_[j][c].conj();
            acc *= Cyclotomic(inv_order);
            Cyclotomic expect(i == j ? 1 : 0);
            if (acc != expect)
                fail("row orthogonality fails for " + row_name(*this, static_cast<int>(i)) + " and " +
                     row_name(*this, static_cast<int>(j)));
        }

    // column orthogonality: sum_i chi_i(c) conj(chi_i(c')) = delta_cc' |G|/size(c)
    for (size_t c = 0; c < classes_.size(); ++c)
        for (size_t d = c; d < classes_.size(); ++d) {
            Cyclotomic acc;
            for (size_t i = 0; i < irreducibles_.size(); ++i)
                acc += irreducibles_[i][c] * irreducibles_[i][d].conj();
            Cyclotomic expect(c == d ? make_rational(order_, classes_[c].size) : Rational(0));
            if (acc != expect)
                fail("column orthogonality fails for classes '" + classes_[c].label + "' and '" +
                     classes_[d].label + "'");
        }
}

nlohmann::json FiniteGroupData::to_json() const {
    nlohmann::json jclasses = nlohmann::json::array();
    for (const auto& c : classes_)
        jclasses.push_back({{"label", c.label}, {"size", c.size}, {"power_map", c.power_map}});
    nlohmann::json jirr = nlohmann::json::array();
    for (const auto& row : irreducibles_) {
        nlohmann::json jrow = nlohmann::json::array();
        for (const auto& v : row) jrow.push_back(nlohmann::json(v));
        jirr.push_back(jrow);
    }
    return nlohmann::json{{"name", name_},
                          {"order", order_},
                          {"exponent", exponent_},
                          {"classes", jclasses},
                          {"irreducibles", jirr},
                          {"irreducible_labels", irreducible_labels_}};
}

void SubgroupEmbedding::validate() const {
    if (!subgroup || !ambient) throw UserError("subgroup embedding missing a group");
    if (static_cast<int>(class_map.size()) != subgroup->num_classes())
        throw UserError("subgroup embedding: class map size mismatch");
    if (class_map[static_cast<size_t>(subgroup->identity_class())] != ambient->identity_class())
        throw UserError("subgroup embedding: identity does not map to identity");
    for (int j = 0; j < subgroup->num_classes(); ++j)
        for (long k = 0; k < subgroup->exponent(); ++k) {
            int lhs = ambient->class_of_power(class_map[static_cast<size_t>(j)], k);
            int rhs = class_map[static_cast<size_t>(subgroup->class_of_power(j, k))];
            if (lhs != rhs)
                throw UserError("subgroup embedding '" + description + "': class map does not commute with power maps");
        }
}

GroupPtr make_cyclic(long n) {
    if (n < 1) throw UserError("cyclic group order must be positive");
    std::vector<ConjugacyClass> classes(static_cast<size_t>(n));
    for (long j = 0; j < n; ++j) {
        auto& c = classes[static_cast<size_t>(j)];
        c.label = j == 0 ? "e" : (j == 1 ? "g" : "g^" + std::to_string(j));
        c.size = 1;
        c.power_map.resize(static_cast<size_t>(n));
        for (long k = 0; k < n; ++k) c.power_map[static_cast<size_t>(k)] = static_cast<int>((j * k) % n);
    }
    std::vector<std::vector<Cyclotomic>> irr(static_cast<size_t>(n));
    std::vector<std::string> labels(static_cast<size_t>(n));
    std::map<std::string, int> aliases;
    for (long i = 0; i < n; ++i) {
        auto& row = irr[static_cast<size_t>(i)];
        row.reserve(static_cast<size_t>(n));
        for (long j = 0; j < n; ++j) row.push_back(Cyclotomic::zeta(n, i * j));
        labels[static_cast<size_t>(i)] = i == 0 ? "triv" : "chi" + std::to_string(i);
    }
    if (n == 2) labels[1] = "sigma"; // the generic alias chi1 still resolves
    return std::make_shared<FiniteGroupData>("c" + std::to_string(n), n, n, std::move(classes), std::move(irr),
                                             std::move(labels), std::move(aliases));
}

GroupPtr make_product(const GroupPtr& g, const GroupPtr& h) {
    long n = std::lcm(g->exponent(), h->exponent());
    int hc = h->num_classes();
    std::vector<ConjugacyClass> classes;
    classes.reserve(static_cast<size_t>(g->num_classes() * hc));
    for (int a = 0; a < g->num_classes(); ++a)
        for (int b = 0; b < hc; ++b) {
            ConjugacyClass c;
            c.label = "(" + g->cls(a).label + "," + h->cls(b).label + ")";
            c.size = g->cls(a).size * h->cls(b).size;
            c.power_map.resize(static_cast<size_t>(n));
            for (long k = 0; k < n; ++k)
                c.power_map[static_cast<size_t>(k)] = g->class_of_power(a, k) * hc + h->class_of_power(b, k);
            classes.push_back(std::move(c));
        }
    std::vector<std::vector<Cyclotomic>> irr;
    std::vector<std::string> labels;
    std::map<std::string, int> aliases;
    for (int i = 0; i < g->num_irreducibles(); ++i)
        for (int j = 0; j < h->num_irreducibles(); ++j) {
            std::vector<Cyclotomic> row;
            row.reserve(classes.size());
            for (int a = 0; a < g->num_classes(); ++a)
                for (int b = 0; b < hc; ++b) row.push_back(g->character_value(i, a) * h->character_value(j, b));
            int idx = static_cast<int>(irr.size());
            irr.push_back(std::move(row));
            labels.push_back("chi" + std::to_string(idx));
            aliases[g->irreducible_label(i) + "." + h->irreducible_label(j)] = idx;
        }
    aliases["triv"] = g->find_irreducible("triv") * h->num_irreducibles() + h->find_irreducible("triv");
    return std::make_shared<FiniteGroupData>(g->name() + "x" + h->name(), g->order() * h->order(), n,
                                             std::move(classes), std::move(irr), std::move(labels),
                                             std::move(aliases));
}

namespace {

GroupPtr make_dihedral_named(long n, const std::string& name) {
    if (n < 3) throw UserError("dihedral group requires n >= 3");
    bool even = n % 2 == 0;
    long m = n / 2; // rotation classes r^1..r^m, with m = (n-1)/2 when odd
    if (!even) m = (n - 1) / 2;
    long exponent = even ? n : 2 * n;
    int refl0 = static_cast<int>(m) + 1;

    auto rot_class = [&](long t) -> int { // class index of rotation r^t
        t = lmod(t, n);
        long j = std::min(t, n - t);
        return static_cast<int>(j); // 0 = identity
    };

    std::vector<ConjugacyClass> classes;
    for (long j = 0; j <= m; ++j) {
        ConjugacyClass c;
        c.label = j == 0 ? "e" : (j == 1 ? "r" : "r^" + std::to_string(j));
        c.size = (j == 0 || (even && j == m)) ? 1 : 2;
        c.power_map.resize(static_cast<size_t>(exponent));
        for (long k = 0; k < exponent; ++k) c.power_map[static_cast<size_t>(k)] = rot_class(j * k);
        classes.push_back(std::move(c));
    }
    int num_refl = even ? 2 : 1;
    for (int t = 0; t < num_refl; ++t) {
        ConjugacyClass c;
        c.label = t == 0 ? "s" : "sr";
        c.size = even ? m : n;
        c.power_map.resize(static_cast<size_t>(exponent));
        for (long k = 0; k < exponent; ++k)
            c.power_map[static_cast<size_t>(k)] = (k % 2 == 0) ? 0 : refl0 + t;
        classes.push_back(std::move(c));
    }

    std::vector<std::vector<Cyclotomic>> irr;
    std::vector<std::string> labels;
    auto linear = [&](long chi_r, long chi_s) {
        std::vector<Cyclotomic> row;
        for (long j = 0; j <= m; ++j) row.push_back(Cyclotomic(chi_r == 1 ? 1 : (j % 2 == 0 ? 1 : -1)));
        row.push_back(Cyclotomic(chi_s));
        if (even) row.push_back(Cyclotomic(chi_r * chi_s));
        return row;
    };
    irr.push_back(linear(1, 1));
    labels.push_back("triv");
    irr.push_back(linear(1, -1));
    labels.push_back("sign");
    if (even) {
        irr.push_back(linear(-1, 1));
        labels.push_back("rsgn");
        irr.push_back(linear(-1, -1));
        labels.push_back("rssgn");
    }
    long num_two_dim = even ? m - 1 : m;
    for (long h = 1; h <= num_two_dim; ++h) {
        std::vector<Cyclotomic> row;
        for (long j = 0; j <= m; ++j) row.push_back(Cyclotomic::zeta(n, h * j) + Cyclotomic::zeta(n, -h * j));
        for (int t = 0; t < num_refl; ++t) row.push_back(Cyclotomic(0));
        irr.push_back(std::move(row));
        labels.push_back(n == 3 ? "std" : "E" + std::to_string(h));
    }
    std::map<std::string, int> aliases;
    if (n == 3)
        aliases["E1"] = 2;
    else
        aliases["std"] = even ? 4 : 2;
    return std::make_shared<FiniteGroupData>(name, 2 * n, exponent, std::move(classes), std::move(irr),
                                             std::move(labels), std::move(aliases));
}

} // namespace

GroupPtr make_dihedral(long n) { return make_dihedral_named(n, "d" + std::to_string(n)); }

GroupPtr make_quaternion8() {
    // classes: 1, -1, {+-i}, {+-j}, {+-k}
    std::vector<std::string> class_labels{"1", "-1", "i", "j", "k"};
    std::vector<long> sizes{1, 1, 2, 2, 2};
    std::vector<std::vector<int>> pm{
        {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 2, 1, 2}, {0, 3, 1, 3}, {0, 4, 1, 4}};
    std::vector<ConjugacyClass> classes;
    for (int c = 0; c < 5; ++c)
        classes.push_back({class_labels[static_cast<size_t>(c)], sizes[static_cast<size_t>(c)],
                           pm[static_cast<size_t>(c)]});
    std::vector<std::vector<long>> table{
        {1, 1, 1, 1, 1}, {1, 1, 1, -1, -1}, {1, 1, -1, 1, -1}, {1, 1, -1, -1, 1}, {2, -2, 0, 0, 0}};
    std::vector<std::vector<Cyclotomic>> irr;
    for (const auto& row : table) {
        std::vector<Cyclotomic> r;
        for (long v : row) r.push_back(Cyclotomic(v));
        irr.push_back(std::move(r));
    }
    return std::make_shared<FiniteGroupData>(
        "q8", 8, 4, std::move(classes), std::move(irr),
        std::vector<std::string>{"triv", "si", "sj", "sk", "std"});
}

GroupPtr make_symmetric4() {
    std::vector<ConjugacyClass> classes(5);
    std::vector<std::string> class_labels{"e", "(12)", "(12)(34)", "(123)", "(1234)"};
    std::vector<long> sizes{1, 6, 3, 8, 6};
    for (int c = 0; c < 5; ++c) {
        classes[static_cast<size_t>(c)].label = class_labels[static_cast<size_t>(c)];
        classes[static_cast<size_t>(c)].size = sizes[static_cast<size_t>(c)];
        classes[static_cast<size_t>(c)].power_map.resize(12);
    }
    for (long k = 0; k < 12; ++k) {
        classes[0].power_map[static_cast<size_t>(k)] = 0;
        classes[1].power_map[static_cast<size_t>(k)] = k % 2 == 0 ? 0 : 1;
        classes[2].power_map[static_cast<size_t>(k)] = k % 2 == 0 ? 0 : 2;
        classes[3].power_map[static_cast<size_t>(k)] = k % 3 == 0 ? 0 : 3;
        classes[4].power_map[static_cast<size_t>(k)] = (k % 4 == 0) ? 0 : (k % 4 == 2 ? 2 : 4);
    }
    std::vector<std::vector<long>> table{{1, 1, 1, 1, 1},
                                         {1, -1, 1, 1, -1},
                                         {2, 0, 2, -1, 0},
                                         {3, 1, -1, 0, -1},
                                         {3, -1, -1, 0, 1}};
    std::vector<std::vector<Cyclotomic>> irr;
    for (const auto& row : table) {
        std::vector<Cyclotomic> r;
        for (long v : row) r.push_back(Cyclotomic(v));
        irr.push_back(std::move(r));
    }
    return std::make_shared<FiniteGroupData>(
        "s4", 24, 12, std::move(classes), std::move(irr),
        std::vector<std::string>{"triv", "sign", "two", "std", "stdsign"});
}

GroupPtr load_character_table(const nlohmann::json& doc) {
    auto require = [&](const char* field) -> const nlohmann::json& {
        if (!doc.contains(field))
            throw UserError(std::string("character table document: missing field '") + field + "'");
        return doc.at(field);
    };
    std::string name = require("name").get<std::string>();
    long order = require("order").get<long>();
    long exponent = require("exponent").get<long>();

    std::vector<ConjugacyClass> classes;
    for (const auto& jc : require("classes")) {
        ConjugacyClass c;
        if (!jc.contains("label") || !jc.contains("size") || !jc.contains("power_map"))
            throw UserError("character table document: each class needs label, size and power_map");
        c.label = jc.at("label").get<std::string>();
        c.size = jc.at("size").get<long>();
        c.power_map = jc.at("power_map").get<std::vector<int>>();
        classes.push_back(std::move(c));
    }
    std::vector<std::vector<Cyclotomic>> irr;
    for (const auto& jrow : require("irreducibles")) {
        std::vector<Cyclotomic> row;
        for (const auto& jv : jrow) row.push_back(jv.get<Cyclotomic>());
        irr.push_back(std::move(row));
    }
    std::vector<std::string> labels;
    if (doc.contains("irreducible_labels"))
        labels = doc.at("irreducible_labels").get<std::vector<std::string>>();
    else
        for (size_t i = 0; i < irr.size(); ++i) labels.push_back("chi" + std::to_string(i));
    return std::make_shared<FiniteGroupData>(name, order, exponent, std::move(classes), std::move(irr),
                                             std::move(labels));
}

GroupPtr load_character_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UserError("cannot open character table file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw UserError("malformed JSON in '" + path + "': " + e.what());
    }
    return load_character_table(doc);
}

GroupPtr resolve_group(const std::string& spec, const std::vector<std::string>& search_dirs) {
    auto builtin = [](const std::string& tok) -> GroupPtr {
        static const std::regex cyc_re("^c([0-9]+)$"), dih_re("^d([0-9]+)$");
        std::smatch m;
        if (std::regex_match(tok, m, cyc_re)) return make_cyclic(std::stol(m[1]));
        if (std::regex_match(tok, m, dih_re)) return make_dihedral(std::stol(m[1]));
        if (tok == "s3") return make_dihedral_named(3, "s3");
        if (tok == "s4") return make_symmetric4();
        if (tok == "q8") return make_quaternion8();
        return nullptr;
    };
    if (GroupPtr g = builtin(spec)) return g;
    if (spec.find('x') != std::string::npos) {
        std::vector<GroupPtr> parts;
        std::stringstream ss(spec);
        std::string tok;
        bool all_builtin = true;
        while (std::getline(ss, tok, 'x')) {
            GroupPtr g = builtin(tok);
            if (!g) {
                all_builtin = false;
                break;
            }
            parts.push_back(g);
        }
        if (all_builtin && parts.size() >= 2) {
            GroupPtr acc = parts[0];
            for (size_t i = 1; i < parts.size(); ++i) acc = make_product(acc, parts[i]);
            return acc;
        }
    }
    std::vector<std::string> tried;
    auto try_path = [&](const std::string& p) -> GroupPtr {
        tried.push_back(p);
        if (std::filesystem::exists(p)) return load_character_table_file(p);
        return nullptr;
    };
    if (GroupPtr g = try_path(spec)) return g;
    for (const auto& dir : search_dirs) {
        if (GroupPtr g = try_path(dir + "/" + spec)) return g;
        if (GroupPtr g = try_path(dir + "/" + spec + ".json")) return g;
    }
    std::ostringstream msg;
    msg << "cannot resolve group '" << spec << "': not a builtin (c<n>, d<n>, s3, s4, q8, products via 'x')"
        << " and no table file found at";
    for (const auto& p : tried) msg << " '" << p << "'";
    throw UserError(msg.str());
}

std::vector<SubgroupEmbedding> cyclic_subgroup_embeddings(const GroupPtr& g) {
    std::vector<SubgroupEmbedding> out;
    std::set<std::set<int>> seen;
    for (int c = 0; c < g->num_classes(); ++c) {
        long m = 0;
        for (long k = 1; k <= g->exponent(); ++k)
            if (g->class_of_power(c, k) == g->identity_class()) {
                m = k;
                break;
            }
        std::vector<int> class_map(static_cast<size_t>(m));
        std::set<int> hit;
        for (long j = 0; j < m; ++j) {
            class_map[static_cast<size_t>(j)] = g->class_of_power(c, j);
            hit.insert(class_map[static_cast<size_t>(j)]);
        }
        if (!seen.insert(hit).second) continue;
        SubgroupEmbedding e;
        e.subgroup = make_cyclic(m);
        e.ambient = g;
        e.class_map = std::move(class_map);
        e.description = "c" + std::to_string(m) + " generated by class '" + g->cls(c).label + "' of " + g->name();
        e.validate();
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace ktdual
