#include "chflag/transcriptions.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chflag {

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("CHFLAG_DATA_DIR"); env && *env) {
        return env;
    }
    return CHFLAG_DATA_DIR;
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return nlohmann::json::parse(in);
}

namespace {

LinearForm int_form(const nlohmann::json& values) {
    LinearForm f(named_basis("H"));
    if (values.size() != f.size()) {
        throw std::runtime_error("transcription row must have 32 entries");
    }
    for (std::size_t h = 0; h < f.size(); ++h) {
        f[h] = values[h].get<long>();
    }
    return f;
}

IntMatrix int_matrix(const nlohmann::json& rows) {
    IntMatrix m;
    for (const auto& row : rows) {
        m.push_back(row.get<std::vector<std::int64_t>>());
    }
    return m;
}

PublishedTables load_published() {
    const auto dir = data_dir();
    PublishedTables t;

    auto cs = read_json_file(dir / "cs_table.json").at("cs");
    for (const auto& row : cs) {
        for (const auto& entry : row) {
            LinearForm f(named_basis("H"));
            for (auto& [index, coeff] : entry.items()) {
                f[static_cast<std::size_t>(std::stoi(index))] = coeff.get<long>();
            }
            t.cs.push_back(std::move(f));
        }
    }

    auto reg = read_json_file(dir / "reg_table.json");
    t.a_reg = int_matrix(reg.at("A_Reg"));
    t.b_reg = int_matrix(reg.at("B_Reg"));
    t.reg_scale_in_text = reg.at("scale_in_text").get<int>();

    auto ind = read_json_file(dir / "induction_forms.json");
    t.ind_t = AffineForm{int_form(ind.at("T").at("const")), int_form(ind.at("T").at("c"))};
    t.ind_v = AffineForm{int_form(ind.at("V").at("const")), int_form(ind.at("V").at("c"))};

    auto fork = read_json_file(dir / "fork_form.json");
    t.fork_linear = int_form(fork.at("linear"));
    t.fork_quadratic_multiplier = fork.at("quadratic_multiplier").get<long>();

    auto fin = read_json_file(dir / "final_coefficients.json");
    t.final_c = parse_decimal(fin.at("c").get<std::string>());
    t.final_coefficients = fin.at("coefficients").get<std::vector<std::string>>();
    return t;
}

std::string form_text(const LinearForm& f) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) {
            continue;
        }
        os << (first ? "" : " + ") << to_fraction_string(f[i]) << "*r" << i;
        first = false;
    }
    return first ? "0" : os.str();
}

void compare_forms(DiffReport& report, const std::string& label, const LinearForm& generated,
                   const LinearForm& published) {
    ++report.total;
    if (generated.coeffs() == published.coeffs()) {
        ++report.matched;
    } else {
        report.mismatches.push_back(label + ": generated " + form_text(generated) +
                                    ", published " + form_text(published));
    }
}

}  // namespace

const PublishedTables& published_tables() {
    static const PublishedTables tables = load_published();
    return tables;
}

std::string DiffReport::summary() const {
    return name + ": " + std::to_string(matched) + "/" + std::to_string(total) + " entries match";
}

std::vector<LinearForm> int_rows_as_forms(const IntMatrix& rows) {
    std::vector<LinearForm> out;
    for (const auto& row : rows) {
        LinearForm f(named_basis("H"));
        for (std::size_t h = 0; h < f.size(); ++h) {
            f[h] = row.at(h);
        }
        out.push_back(std::move(f));
    }
    return out;
}

DiffReport diff_cs(const CSMatrix& generated, const PublishedTables& published) {
    DiffReport report;
    report.name = "cs";
    for (std::size_t i = 0; i < CSMatrix::kSize; ++i) {
        for (std::size_t j = 0; j < CSMatrix::kSize; ++j) {
            compare_forms(report, "(" + std::to_string(i) + "," + std::to_string(j) + ")",
                          generated(i, j), published.cs.at(i * CSMatrix::kSize + j));
        }
    }
    return report;
}

DiffReport diff_reg(const RegMatrices& generated, const PublishedTables& published) {
    DiffReport report;
    report.name = "reg";
    auto compare = [&](const char* which, const IntMatrix& gen, const IntMatrix& pub) {
        for (std::size_t j = 0; j < pub.size(); ++j) {
            for (std::size_t h = 0; h < pub[j].size(); ++h) {
                ++report.total;
                std::int64_t g = (j < gen.size() && h < gen[j].size()) ? gen[j][h] : -1;
                if (g == pub[j][h]) {
                    ++report.matched;
                } else {
                    report.mismatches.push_back(std::string(which) + "[" + std::to_string(j) + "][" +
                                                std::to_string(h) + "]: generated " +
                                                std::to_string(g) + ", published " +
                                                std::to_string(pub[j][h]));
                }
            }
        }
    };
    compare("A_Reg", generated.a_reg, published.a_reg);
    compare("B_Reg", generated.b_reg, published.b_reg);
    return report;
}

DiffReport diff_induction(const std::string& name, const AffineForm& generated,
                          const AffineForm& published) {
    DiffReport report;
    report.name = name;
    for (std::size_t h = 0; h < published.const_part.size(); ++h) {
        ++report.total;
        if (generated.const_part[h] == published.const_part[h] &&
            generated.c_part[h] == published.c_part[h]) {
            ++report.matched;
        } else {
            report.mismatches.push_back(
                "r" + std::to_string(h) + ": generated (" + to_fraction_string(generated.const_part[h]) +
                ") + (" + to_fraction_string(generated.c_part[h]) + ")c, published (" +
                to_fraction_string(published.const_part[h]) + ") + (" +
                to_fraction_string(published.c_part[h]) + ")c");
        }
    }
    return report;
}

DiffReport diff_fork(const ForkForm& generated, const PublishedTables& published) {
    DiffReport report;
    report.name = "fork";
    for (std::size_t h = 0; h < published.fork_linear.size(); ++h) {
        ++report.total;
        if (generated.linear[h] == published.fork_linear[h]) {
            ++report.matched;
        } else {
            report.mismatches.push_back("r" + std::to_string(h) + ": generated " +
                                        to_fraction_string(generated.linear[h]) + ", published " +
                                        to_fraction_string(published.fork_linear[h]));
        }
    }
    ++report.total;
    if (generated.quadratic_multiplier == published.fork_quadratic_multiplier) {
        ++report.matched;
    } else {
        report.mismatches.push_back("quadratic multiplier: generated " +
                                    to_fraction_string(generated.quadratic_multiplier) +
                                    ", published " +
                                    to_fraction_string(published.fork_quadratic_multiplier));
    }
    return report;
}

std::optional<Rational> fit_scale(const std::vector<LinearForm>& raw,
                                  const std::vector<LinearForm>& published) {
    if (raw.size() != published.size()) {
        return std::nullopt;
    }
    std::optional<Rational> scale;
    for (std::size_t r = 0; r < raw.size(); ++r) {
        for (std::size_t h = 0; h < raw[r].size(); ++h) {
            const Rational& x = raw[r][h];
            const Rational& y = published[r][h];
            if (x == 0) {
                if (y != 0) {
                    return std::nullopt;
                }
                continue;
            }
            Rational s = y / x;
            if (!scale) {
                scale = s;
            } else if (*scale != s) {
                return std::nullopt;
            }
        }
    }
    return scale;
}

}  // namespace chflag
