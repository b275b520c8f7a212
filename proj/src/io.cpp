#include "ptab/io.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace ptab {

Repr parse_repr(const std::string& name)
{
    if (name == "standard") return Repr::Standard;
    if (name == "alternative") return Repr::Alternative;
    if (name == "bare") return Repr::Bare;
    throw FormatError("unknown representation '" + name + "'");
}

const char* to_string(Repr r)
{
    switch (r) {
    case Repr::Standard: return "standard";
    case Repr::Alternative: return "alternative";
    case Repr::Bare: return "bare";
    }
    return "?";
}

namespace {

char arrow_char(Arrow a)
{
    switch (a) {
    case Arrow::Up: return '^';
    case Arrow::Left: return '<';
    case Arrow::None: break;
    }
    return '.';
}

Json header(Kind kind, const Shape& base, const char* repr)
{
    Json doc;
    doc["fmt"] = kFormatTag;
    doc["type"] = kind == Kind::A ? "A" : "B";
    if (repr) doc["repr"] = repr;
    doc["border"] = base.border_string();
    return doc;
}

// cell_text(i, j) gives the symbol of a cell; diagonal cells are skipped
// when skip_diagonal is set.
template <class F>
Json rows_json(const Diagram& d, bool skip_diagonal, F cell_text)
{
    Json rows = Json::array();
    for (int i = 0; i < d.num_rows(); ++i) {
        std::string cells;
        for (int j = 0; j < d.row_size(i); ++j) {
            if (skip_diagonal && d.is_diagonal(i, j)) continue;
            cells += cell_text(i, j);
        }
        Json row;
        row["label"] = d.rows()[i];
        row["cells"] = cells;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Json to_json(const TableauA& t)
{
    Json doc = header(Kind::A, t.shape(), nullptr);
    doc["rows"] = rows_json(t.diagram(), false, [&](int i, int j) { return char('0' + t.bits().get(i, j)); });
    return doc;
}

Json to_json(const TableauB& t)
{
    Json doc = header(Kind::B, t.diagram().base(), nullptr);
    doc["rows"] = rows_json(t.diagram(), false, [&](int i, int j) { return char('0' + t.bits().get(i, j)); });
    return doc;
}

Json to_json(const AltTableauA& a)
{
    Json doc = header(Kind::A, a.shape(), "alternative");
    doc["rows"] = rows_json(a.diagram(), false, [&](int i, int j) { return arrow_char(a.arrows().get(i, j)); });
    return doc;
}

Json to_json(const AltTableauB& a)
{
    Json doc = header(Kind::B, a.diagram().base(), "alternative");
    doc["rows"] = rows_json(a.diagram(), true, [&](int i, int j) { return arrow_char(a.arrows().get(i, j)); });
    doc["diagonal_ones"] = a.diagonal_ones();
    return doc;
}

Json to_json(const BareTableau& b)
{
    Json doc = header(Kind::A, b.shape(), "bare");
    doc["rows"] = rows_json(b.diagram(), false, [&](int i, int j) { return b.dots().get(i, j) ? '*' : '.'; });
    return doc;
}

Json to_json(const AnyTableau& t)
{
    return std::visit([](const auto& v) { return to_json(v); }, t);
}

// ---------------------------------------------------------------------------

namespace {

template <class T>
T field(const Json& doc, const char* key)
{
    if (!doc.is_object() || !doc.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    try {
        return doc.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw FormatError(std::string("field '") + key + "' has the wrong type");
    }
}

// Per-row cell strings in diagram order, checked against the expected
// lengths. Rows with no cells may be omitted from the document.
std::vector<std::string> row_strings(const Json& doc, const Diagram& d, bool skip_diagonal)
{
    const Json rows = doc.contains("rows") ? doc.at("rows") : Json::array();
    if (!rows.is_array()) throw FormatError("field 'rows' must be an array");
    std::map<int, std::string> by_label;
    for (const auto& row : rows) {
        const int label = field<int>(row, "label");
        const auto cells = field<std::string>(row, "cells");
        if (d.row_index(label) < 0) throw ValidationError({ViolationKind::ExtraCell, label, 0});
        if (!by_label.emplace(label, cells).second) throw FormatError("row " + std::to_string(label) + " listed twice");
    }
    std::vector<std::string> out;
    for (int i = 0; i < d.num_rows(); ++i) {
        const int label = d.rows()[i];
        const int expected = d.row_size(i) - ((skip_diagonal && label < 0) ? 1 : 0);
        const auto it = by_label.find(label);
        const std::string cells = it == by_label.end() ? std::string() : it->second;
        const int got = static_cast<int>(cells.size());
        if (got < expected) throw ValidationError({ViolationKind::MissingCell, label, d.cols()[got]});
        if (got > expected) throw ValidationError({ViolationKind::ExtraCell, label, 0});
        out.push_back(cells);
    }
    return out;
}

Arrow parse_arrow(char ch)
{
    switch (ch) {
    case '^': return Arrow::Up;
    case '<': return Arrow::Left;
    case '.': return Arrow::None;
    default: throw FormatError(std::string("arrow cell symbol must be ^, < or ., got '") + ch + "'");
    }
}

AnyTableau parse_standard(const Diagram& d, const std::vector<std::string>& rows)
{
    CellMap cells;
    for (int i = 0; i < d.num_rows(); ++i)
        for (int j = 0; j < d.row_size(i); ++j) {
            const char ch = rows[i][j];
            if (ch != '0' && ch != '1') throw FormatError(std::string("cell symbol must be 0 or 1, got '") + ch + "'");
            cells[{d.rows()[i], d.cols()[j]}] = ch - '0';
        }
    if (d.kind() == Kind::A) return validate_a(d.base(), cells);
    return validate_b(d.shifted(), cells);
}

AnyTableau parse_alternative(const Json& doc, const Diagram& d, const std::vector<std::string>& rows)
{
    Arrows arrows(d);
    for (int i = 0; i < d.num_rows(); ++i) {
        std::size_t pos = 0;
        for (int j = 0; j < d.row_size(i); ++j) {
            if (d.is_diagonal(i, j)) continue;
            arrows.set(i, j, parse_arrow(rows[i][pos++]));
        }
    }
    if (d.kind() == Kind::A) return AltTableauA(std::move(arrows));
    AltTableauB alt(std::move(arrows));
    if (doc.contains("diagonal_ones")) {
        auto declared = field<std::vector<int>>(doc, "diagonal_ones");
        std::sort(declared.begin(), declared.end());
        if (declared != alt.diagonal_ones())
            throw FormatError("diagonal_ones does not match the columns without an up arrow");
    }
    return alt;
}

AnyTableau parse_bare(const Diagram& d, const std::vector<std::string>& rows)
{
    if (d.kind() != Kind::A) throw FormatError("bare representation exists only for type A");
    Bits dots(d);
    for (int i = 0; i < d.num_rows(); ++i)
        for (int j = 0; j < d.row_size(i); ++j) {
            const char ch = rows[i][j];
            if (ch != '*' && ch != '.') throw FormatError(std::string("bare cell symbol must be * or ., got '") + ch + "'");
            dots.set(i, j, ch == '*');
        }
    return BareTableau(std::move(dots));
}

}  // namespace

AnyTableau from_json(const Json& doc)
{
    if (field<std::string>(doc, "fmt") != kFormatTag) throw FormatError("unsupported format tag");
    const auto type = field<std::string>(doc, "type");
    if (type != "A" && type != "B") throw FormatError("type must be \"A\" or \"B\"");
    const Repr repr = doc.contains("repr") ? parse_repr(field<std::string>(doc, "repr")) : Repr::Standard;
    Shape base;
    try {
        base = Shape::from_border(field<std::string>(doc, "border"));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    const Diagram d = type == "A" ? Diagram::type_a(base) : Diagram::type_b(ShiftedShape(base));
    const auto rows = row_strings(doc, d, repr == Repr::Alternative && type == "B");
    switch (repr) {
    case Repr::Standard: return parse_standard(d, rows);
    case Repr::Alternative: return parse_alternative(doc, d, rows);
    case Repr::Bare: return parse_bare(d, rows);
    }
    throw FormatError("unreachable");
}

AnyTableau parse_tableau(const std::string& text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    return from_json(doc);
}

Kind kind_of(const AnyTableau& t)
{
    return (std::holds_alternative<TableauB>(t) || std::holds_alternative<AltTableauB>(t)) ? Kind::B : Kind::A;
}

Repr repr_of(const AnyTableau& t)
{
    if (std::holds_alternative<TableauA>(t) || std::holds_alternative<TableauB>(t)) return Repr::Standard;
    if (std::holds_alternative<BareTableau>(t)) return Repr::Bare;
    return Repr::Alternative;
}

TableauA standard_a(const AnyTableau& t)
{
    if (const auto* s = std::get_if<TableauA>(&t)) return *s;
    if (const auto* a = std::get_if<AltTableauA>(&t)) return from_alternative(*a);
    if (const auto* b = std::get_if<BareTableau>(&t)) return from_alternative(bare_to_alternative(*b));
    throw std::invalid_argument("expected a type A tableau");
}

TableauB standard_b(const AnyTableau& t)
{
    if (const auto* s = std::get_if<TableauB>(&t)) return *s;
    if (const auto* a = std::get_if<AltTableauB>(&t)) return from_alternative(*a);
    throw std::invalid_argument("expected a type B tableau");
}

AnyTableau convert(const AnyTableau& t, Repr target)
{
    if (kind_of(t) == Kind::B) {
        const TableauB s = standard_b(t);
        switch (target) {
        case Repr::Standard: return s;
        case Repr::Alternative: return to_alternative(s);
        case Repr::Bare: throw std::invalid_argument("bare representation exists only for type A");
        }
    }
    if (target == Repr::Bare && std::holds_alternative<BareTableau>(t)) return t;
    const TableauA s = standard_a(t);
    switch (target) {
    case Repr::Standard: return s;
    case Repr::Alternative: return to_alternative(s);
    case Repr::Bare: return to_bare(to_alternative(s));
    }
    throw std::invalid_argument("unreachable");
}

// ---------------------------------------------------------------------------

namespace {

template <class F>
std::string draw(const Diagram& d, F symbol)
{
    std::size_t width = 1;
    for (int r : d.rows()) width = std::max(width, std::to_string(r).size());
    for (int c : d.cols()) width = std::max(width, std::to_string(c).size());
    const auto pad = [&](const std::string& s) { return std::string(width - s.size(), ' ') + s; };

    std::string out = pad("");
    for (int c : d.cols()) out += " " + pad(std::to_string(c));
    out += "\n";
    for (int i = 0; i < d.num_rows(); ++i) {
        std::string line = pad(std::to_string(d.rows()[i]));
        for (int j = 0; j < d.row_size(i); ++j) line += " " + pad(std::string(1, symbol(i, j)));
        out += line + "\n";
    }
    return out;
}

}  // namespace

std::string render(const AnyTableau& t)
{
    if (const auto* s = std::get_if<TableauA>(&t))
        return draw(s->diagram(), [&](int i, int j) { return char('0' + s->bits().get(i, j)); });
    if (const auto* s = std::get_if<TableauB>(&t))
        return draw(s->diagram(), [&](int i, int j) { return char('0' + s->bits().get(i, j)); });
    if (const auto* a = std::get_if<AltTableauA>(&t))
        return draw(a->diagram(), [&](int i, int j) { return arrow_char(a->arrows().get(i, j)); });
    if (const auto* a = std::get_if<AltTableauB>(&t))
        return draw(a->diagram(), [&](int i, int j) {
            return a->diagram().is_diagonal(i, j) ? '\\' : arrow_char(a->arrows().get(i, j));
        });
    const auto& b = std::get<BareTableau>(t);
    return draw(b.diagram(), [&](int i, int j) { return b.dots().get(i, j) ? '*' : '.'; });
}

}  // namespace ptab
