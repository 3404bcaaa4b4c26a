#include "addseq/model_io.hpp"

#include <algorithm>
#include <sstream>

namespace addseq {

namespace {

constexpr size_t kWrapColumn = 72;

void append_wrapped(std::string& out, std::string& line, const std::string& piece) {
    if (line.size() + piece.size() > kWrapColumn && !line.empty()) {
        out += line;
        out += '\n';
        line = "   ";
    }
    line += piece;
}

std::string term_text(long long coeff, const VarRef& v, bool first) {
    std::string s;
    if (first) {
        if (coeff < 0) {
            s += "- ";
        }
    } else {
        s += (coeff < 0) ? " - " : " + ";
    }
    long long mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1) {
        s += std::to_string(mag) + " ";
    }
    s += var_name(v);
    return s;
}

std::string relation_text(Relation r) {
    switch (r) {
    case Relation::LessEq:
        return "<=";
    case Relation::Eq:
        return "=";
    case Relation::GreaterEq:
        return ">=";
    }
    return "?";
}

void emit_expression(std::string& out, const std::string& head,
                     const std::vector<std::pair<long long, VarRef>>& terms) {
    std::string line = " " + head;
    if (terms.empty()) {
        line += " 0";
    } else {
        bool first = true;
        for (const auto& [coeff, v] : terms) {
            append_wrapped(out, line, term_text(coeff, v, first));
            first = false;
        }
    }
    out += line;
}

} // namespace

std::string emit_lp(const IlpModel& model) {
    std::string out;
    out += "Minimize\n";
    emit_expression(out, "COST:", model.objective);
    out += "\nSubject To\n";
    for (const LinearConstraint& c : model.constraints) {
        std::string body;
        emit_expression(body, c.label + ":", c.terms);
        out += body;
        out += " " + relation_text(c.relation) + " " + std::to_string(c.rhs) + "\n";
    }

    out += "Bounds\n";
    for (const auto& [v, dom] : model.domains) {
        if (dom.kind == VarDomain::Kind::Fixed) {
            out += " " + var_name(v) + " = " + std::to_string(dom.lower) + "\n";
        } else if (dom.kind == VarDomain::Kind::Integer) {
            out += " " + std::to_string(dom.lower) + " <= " + var_name(v) + " <= " +
                   std::to_string(dom.upper) + "\n";
        }
    }

    bool any_binary = false;
    bool any_general = false;
    for (const auto& [v, dom] : model.domains) {
        (void)v;
        if (dom.kind == VarDomain::Kind::Integer) {
            any_general = true;
        } else {
            any_binary = true;
        }
    }
    if (any_binary) {
        out += "Binary\n";
        for (const auto& [v, dom] : model.domains) {
            if (dom.kind != VarDomain::Kind::Integer) {
                out += " " + var_name(v) + "\n";
            }
        }
    }
    if (any_general) {
        out += "General\n";
        for (const auto& [v, dom] : model.domains) {
            if (dom.kind == VarDomain::Kind::Integer) {
                out += " " + var_name(v) + "\n";
            }
        }
    }
    out += "End\n";
    return out;
}

namespace {

std::string pad(const std::string& s, size_t width) {
    if (s.size() >= width) {
        return s + " ";
    }
    return s + std::string(width - s.size(), ' ');
}

} // namespace

std::string emit_mps(const IlpModel& model) {
    size_t width = 8;
    for (const auto& [v, dom] : model.domains) {
        (void)dom;
        width = std::max(width, var_name(v).size());
    }
    for (const LinearConstraint& c : model.constraints) {
        width = std::max(width, c.label.size());
    }
    width += 2;

    // Column-major entries: objective first, then constraint rows in order.
    std::map<VarRef, std::vector<std::pair<std::string, long long>>> entries;
    for (const auto& [v, dom] : model.domains) {
        (void)dom;
        entries[v] = {};
    }
    for (const auto& [coeff, v] : model.objective) {
        entries[v].emplace_back("COST", coeff);
    }
    for (const LinearConstraint& c : model.constraints) {
        for (const auto& [coeff, v] : c.terms) {
            entries[v].emplace_back(c.label, coeff);
        }
    }

    std::string out;
    out += "NAME" + std::string(10, ' ') + "ADDSEQ\n";
    out += "ROWS\n";
    out += " N  COST\n";
    for (const LinearConstraint& c : model.constraints) {
        char kind = 'E';
        if (c.relation == Relation::LessEq) {
            kind = 'L';
        } else if (c.relation == Relation::GreaterEq) {
            kind = 'G';
        }
        out += std::string(" ") + kind + "  " + c.label + "\n";
    }

    out += "COLUMNS\n";
    out += "    " + pad("MARKER", width) + pad("'MARKER'", width) + "'INTORG'\n";
    for (auto& [v, rows] : entries) {
        if (rows.empty()) {
            // Keep otherwise-unreferenced columns visible to readers.
            rows.emplace_back("COST", 0);
        }
        for (const auto& [row, coeff] : rows) {
            out += "    " + pad(var_name(v), width) + pad(row, width) +
                   std::to_string(coeff) + "\n";
        }
    }
    out += "    " + pad("MARKER", width) + pad("'MARKER'", width) + "'INTEND'\n";

    out += "RHS\n";
    for (const LinearConstraint& c : model.constraints) {
        if (c.rhs != 0) {
            out += "    " + pad("RHS", width) + pad(c.label, width) +
                   std::to_string(c.rhs) + "\n";
        }
    }

    out += "BOUNDS\n";
    for (const auto& [v, dom] : model.domains) {
        switch (dom.kind) {
        case VarDomain::Kind::Fixed:
            out += " FX " + pad("BND", width) + pad(var_name(v), width) +
                   std::to_string(dom.lower) + "\n";
            break;
        case VarDomain::Kind::Binary:
            out += " BV " + pad("BND", width) + var_name(v) + "\n";
            break;
        case VarDomain::Kind::Integer:
            out += " LI " + pad("BND", width) + pad(var_name(v), width) +
                   std::to_string(dom.lower) + "\n";
            out += " UI " + pad("BND", width) + pad(var_name(v), width) +
                   std::to_string(dom.upper) + "\n";
            break;
        }
    }
    out += "ENDATA\n";
    return out;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        tokens.push_back(tok);
    }
    return tokens;
}

VarRef parse_var_name(const std::string& name) {
    if (name.size() < 2) {
        throw Error("bad variable name in MPS: " + name);
    }
    char kind = name[0];
    std::string rest = name.substr(1);
    try {
        if (kind == 'x') {
            return xvar(std::stoi(rest));
        }
        if (kind == 'd') {
            return dvar(std::stoi(rest));
        }
        if (kind == 'y') {
            size_t us = rest.find('_');
            if (us == std::string::npos) {
                throw Error("bad y variable: " + name);
            }
            return yvar(std::stoi(rest.substr(0, us)), std::stoi(rest.substr(us + 1)));
        }
    } catch (const std::invalid_argument&) {
        throw Error("bad variable name in MPS: " + name);
    }
    throw Error("unknown variable kind in MPS: " + name);
}

} // namespace

IlpModel parse_mps(const std::string& text) {
    IlpModel model;
    std::map<std::string, size_t> row_index;

    enum class Section { None, Rows, Columns, Rhs, Bounds, Done };
    Section section = Section::None;

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        bool header = line[0] != ' ' && line[0] != '\t';
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        if (header) {
            const std::string& name = tokens[0];
            if (name == "NAME") {
                continue;
            } else if (name == "ROWS") {
                section = Section::Rows;
            } else if (name == "COLUMNS") {
                section = Section::Columns;
            } else if (name == "RHS") {
                section = Section::Rhs;
            } else if (name == "BOUNDS") {
                section = Section::Bounds;
            } else if (name == "RANGES") {
                throw Error("RANGES section not supported");
            } else if (name == "ENDATA") {
                section = Section::Done;
                break;
            } else {
                throw Error("unknown MPS section: " + name);
            }
            continue;
        }

        switch (section) {
        case Section::Rows: {
            if (tokens.size() != 2) {
                throw Error("bad ROWS line: " + line);
            }
            if (tokens[0] == "N") {
                continue; // objective row
            }
            LinearConstraint c;
            c.label = tokens[1];
            if (tokens[0] == "L") {
                c.relation = Relation::LessEq;
            } else if (tokens[0] == "G") {
                c.relation = Relation::GreaterEq;
            } else if (tokens[0] == "E") {
                c.relation = Relation::Eq;
            } else {
                throw Error("bad row kind: " + tokens[0]);
            }
            row_index[c.label] = model.constraints.size();
            model.constraints.push_back(std::move(c));
            break;
        }
        case Section::Columns: {
            if (tokens.size() >= 3 && tokens[1] == "'MARKER'") {
                continue;
            }
            if (tokens.size() < 3 || (tokens.size() - 1) % 2 != 0) {
                throw Error("bad COLUMNS line: " + line);
            }
            VarRef v = parse_var_name(tokens[0]);
            if (!model.domains.contains(v)) {
                model.domains[v] = VarDomain::binary();
            }
            for (size_t idx = 1; idx + 2 <= tokens.size(); idx += 2) {
                const std::string& row = tokens[idx];
                long long coeff = std::stoll(tokens[idx + 1]);
                if (coeff == 0) {
                    continue;
                }
                if (row == "COST") {
                    model.objective.emplace_back(coeff, v);
                } else {
                    auto it = row_index.find(row);
                    if (it == row_index.end()) {
                        throw Error("unknown row in COLUMNS: " + row);
                    }
                    model.constraints[it->second].terms.emplace_back(coeff, v);
                }
            }
            break;
        }
        case Section::Rhs: {
            if (tokens.size() < 3 || tokens.size() % 2 == 0) {
                throw Error("bad RHS line: " + line);
            }
            for (size_t idx = 1; idx + 2 <= tokens.size(); idx += 2) {
                auto it = row_index.find(tokens[idx]);
                if (it == row_index.end()) {
                    throw Error("unknown row in RHS: " + tokens[idx]);
                }
                model.constraints[it->second].rhs = std::stoll(tokens[idx + 1]);
            }
            break;
        }
        case Section::Bounds: {
            if (tokens.size() < 3) {
                throw Error("bad BOUNDS line: " + line);
            }
            VarRef v = parse_var_name(tokens[2]);
            const std::string& kind = tokens[0];
            if (kind == "BV") {
                model.domains[v] = VarDomain::binary();
            } else if (kind == "FX") {
                model.domains[v] = VarDomain::fixed(std::stoll(tokens.at(3)));
            } else if (kind == "LI") {
                auto dom = model.domains.count(v) ? model.domains[v] : VarDomain::binary();
                dom.kind = VarDomain::Kind::Integer;
                dom.lower = std::stoll(tokens.at(3));
                model.domains[v] = dom;
            } else if (kind == "UI") {
                auto dom = model.domains.count(v) ? model.domains[v] : VarDomain::binary();
                dom.kind = VarDomain::Kind::Integer;
                dom.upper = std::stoll(tokens.at(3));
                model.domains[v] = dom;
            } else {
                throw Error("unsupported bound kind: " + kind);
            }
            break;
        }
        case Section::None:
        case Section::Done:
            throw Error("unexpected MPS data line: " + line);
        }
    }
    return model;
}

} // namespace addseq
