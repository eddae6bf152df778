#pragma once

// Published tables, read from the JSON files under data/. Only comparison
// and reporting code uses these; the generators never do.

#include "chflag/inequalities.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace chflag {

// $CHFLAG_DATA_DIR if set, else the source-tree data/ directory.
std::filesystem::path data_dir();

nlohmann::json read_json_file(const std::filesystem::path& path);

struct PublishedTables {
    std::vector<LinearForm> cs;  // row-major 8x8
    IntMatrix a_reg;
    IntMatrix b_reg;
    int reg_scale_in_text = 0;
    AffineForm ind_t{LinearForm(named_basis("H")), LinearForm(named_basis("H"))};
    AffineForm ind_v{LinearForm(named_basis("H")), LinearForm(named_basis("H"))};
    LinearForm fork_linear{named_basis("H")};
    Rational fork_quadratic_multiplier;
    std::vector<std::string> final_coefficients;  // published values of F at final_c
    Rational final_c;
};

const PublishedTables& published_tables();

struct DiffReport {
    std::string name;
    std::size_t total = 0;
    std::size_t matched = 0;
    std::vector<std::string> mismatches;

    bool ok() const { return matched == total; }
    std::string summary() const;
};

DiffReport diff_cs(const CSMatrix& generated, const PublishedTables& published);
DiffReport diff_reg(const RegMatrices& generated, const PublishedTables& published);
DiffReport diff_induction(const std::string& name, const AffineForm& generated,
                          const AffineForm& published);
DiffReport diff_fork(const ForkForm& generated, const PublishedTables& published);

// The single scalar s with s * raw == published entrywise, if any.
std::optional<Rational> fit_scale(const std::vector<LinearForm>& raw,
                                  const std::vector<LinearForm>& published);

std::vector<LinearForm> int_rows_as_forms(const IntMatrix& rows);

}  // namespace chflag
