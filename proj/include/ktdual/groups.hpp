#ifndef KTDUAL_GROUPS_HPP
#define KTDUAL_GROUPS_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "ktdual/cyclo.hpp"

namespace ktdual {

struct ConjugacyClass {
    std::string label;
    long size = 0;
    // power_map[k] = index of the class containing g^k, for k = 0..exponent-1.
    std::vector<int> power_map;
};

class FiniteGroupData;
using GroupPtr = std::shared_ptr<const FiniteGroupData>;

/// A finite group presented by exactly the data the representation ring
/// needs: conjugacy classes with power maps plus an exact character table.
/// No element-level multiplication is stored. Immutable after validation.
class FiniteGroupData {
public:
    FiniteGroupData(std::string name, long order, long exponent,
                    std::vector<ConjugacyClass> classes,
                    std::vector<std::vector<Cyclotomic>> irreducibles,
                    std::vector<std::string> irreducible_labels,
                    std::map<std::string, int> label_aliases = {});

    const std::string& name() const { return name_; }
    long order() const { return order_; }
    long exponent() const { return exponent_; }
    int num_classes() const { return static_cast<int>(classes_.size()); }
    int num_irreducibles() const { return static_cast<int>(irreducibles_.size()); }
    const ConjugacyClass& cls(int c) const { return classes_[static_cast<size_t>(c)]; }
    const std::vector<ConjugacyClass>& classes() const { return classes_; }
    int identity_class() const { return identity_class_; }

    /// Index of the class containing g^k for g in class c, any integer k.
    int class_of_power(int c, long k) const;

    const std::vector<std::vector<Cyclotomic>>& irreducibles() const { return irreducibles_; }
    const Cyclotomic& character_value(int irr, int c) const {
        return irreducibles_[static_cast<size_t>(irr)][static_cast<size_t>(c)];
    }
    long irreducible_dim(int irr) const;
    const std::string& irreducible_label(int irr) const {
        return irreducible_labels_[static_cast<size_t>(irr)];
    }
    /// Resolves a primary label, an alias, or the generic form "chi<k>".
    int find_irreducible(const std::string& label) const;

    bool is_abelian() const;

    /// Checks every structural invariant (class sizes, power-map coherence,
    /// orthogonality, sum of squared dimensions). Throws UserError naming
    /// the offending class or row. Ran by every constructor path.
    void validate() const;

    nlohmann::json to_json() const;

private:
    std::string name_;
    long order_;
    long exponent_;
    std::vector<ConjugacyClass> classes_;
    std::vector<std::vector<Cyclotomic>> irreducibles_;
    std::vector<std::string> irreducible_labels_;
    std::map<std::string, int> label_aliases_;
    int identity_class_ = -1;
};

/// Inclusion of a (cyclic) subgroup, recorded at the class level:
/// class_map[j] = the ambient class containing the j-th subgroup class.
struct SubgroupEmbedding {
    GroupPtr subgroup;
    GroupPtr ambient;
    std::vector<int> class_map;
    std::string description;

    void validate() const;
};

GroupPtr make_cyclic(long n);
GroupPtr make_product(const GroupPtr& g, const GroupPtr& h);
GroupPtr make_dihedral(long n);
GroupPtr make_quaternion8();
GroupPtr make_symmetric4();

GroupPtr load_character_table(const nlohmann::json& document);
GroupPtr load_character_table_file(const std::string& path);

/// Resolves "c4", "d5", "s3", "s4", "q8", products joined by 'x' such as
/// "c2xc3", or a path to a character-table JSON document (tried verbatim,
/// then within each search directory).
GroupPtr resolve_group(const std::string& spec, const std::vector<std::string>& search_dirs = {});

/// One embedding per conjugacy class: the cyclic group generated by a class
/// representative, deduplicated by the set of ambient classes it hits.
std::vector<SubgroupEmbedding> cyclic_subgroup_embeddings(const GroupPtr& g);

} // namespace ktdual

#endif
