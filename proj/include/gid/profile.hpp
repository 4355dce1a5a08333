#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gid/individual_set.hpp"

namespace gid {

enum class Cell : std::int8_t {
    Neg = -1,
    Pos = 1,
    Indifferent = 2, // ⋆, ternary profiles only
    Unknown = 3,     // ∗, partial profiles only
};

enum class ProfileKind { Binary, Ternary, Partial };

const char* to_string(ProfileKind kind);
char cell_char(Cell c);

// Square valuation matrix. Row a is the evaluator, column b the evaluated:
// at(a, b) is what a thinks of b.
class Profile {
public:
    Profile() = default;
    // All entries start at -1.
    explicit Profile(int n, ProfileKind kind = ProfileKind::Binary);

    static Profile from_rows(ProfileKind kind, const std::vector<std::vector<Cell>>& rows,
                             std::vector<std::string> names = {});

    int size() const noexcept { return n_; }
    ProfileKind kind() const noexcept { return kind_; }
    IndividualSet everyone() const noexcept { return IndividualSet::first(n_); }

    Cell at(Individual from, Individual to) const;
    void set(Individual from, Individual to, Cell value);
    // Binary rewrite of a whole row: +1 on `positives`, -1 elsewhere.
    void set_row(Individual from, IndividualSet positives);

    // Outgoing views (row).
    IndividualSet qualified_by(Individual from) const;
    IndividualSet disqualified_by(Individual from) const;
    IndividualSet undecided_in_row(Individual from) const;

    // Incoming views (column): N^1(a), N^-1(a).
    IndividualSet qualifiers(Individual to) const;
    IndividualSet disqualifiers(Individual to) const;
    IndividualSet undecided_in_column(Individual to) const;

    bool self_qualifies(Individual a) const { return at(a, a) == Cell::Pos; }

    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(Individual a) const;
    std::optional<Individual> find(const std::string& name) const;
    void set_names(std::vector<std::string> names);

    friend bool operator==(const Profile& a, const Profile& b);

private:
    void check_index(Individual a) const;

    struct Masks {
        std::uint64_t pos = 0;
        std::uint64_t known = 0;
    };

    int n_ = 0;
    ProfileKind kind_ = ProfileKind::Binary;
    std::vector<Masks> rows_;
    std::vector<Masks> cols_;
    std::vector<std::string> names_;
};

std::string default_name(Individual a);

// Elementwise sign flip; binary profiles only.
Profile negate(const Profile& profile);

struct QualificationGraph {
    int n = 0;
    std::vector<IndividualSet> out;

    std::size_t edge_count() const;
    bool has_edge(Individual from, Individual to) const;
    std::vector<std::pair<Individual, Individual>> edges() const;
};

QualificationGraph qualification_graph(const Profile& profile);

// Every row has exactly r positive entries.
bool is_r_profile(const Profile& profile, int r);

} // namespace gid
