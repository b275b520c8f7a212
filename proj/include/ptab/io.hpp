#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "ptab/tableau.hpp"

namespace ptab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatTag = "ptab/1";

/// Malformed document: bad JSON, wrong tag, unknown representation, bad
/// cell symbol. Cell-set and tableau-condition failures raise ValidationError.
class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Repr { Standard, Alternative, Bare };

Repr parse_repr(const std::string& name);
const char* to_string(Repr r);

// {"fmt":"ptab/1","type":"A","border":"SSW...","rows":[{"label":1,"cells":"0110"}]}
// Alternative and bare documents add "repr" after "type" and use the
// symbols ^ < . and * . respectively. Type B alternative rows with negative
// labels omit the cut-off diagonal cell and the document lists
// "diagonal_ones".
Json to_json(const TableauA& t);
Json to_json(const TableauB& t);
Json to_json(const AltTableauA& a);
Json to_json(const AltTableauB& a);
Json to_json(const BareTableau& b);

using AnyTableau = std::variant<TableauA, TableauB, AltTableauA, AltTableauB, BareTableau>;

AnyTableau from_json(const Json& doc);
/// Parses text; throws FormatError on invalid JSON.
AnyTableau parse_tableau(const std::string& text);
Json to_json(const AnyTableau& t);

Kind kind_of(const AnyTableau& t);
Repr repr_of(const AnyTableau& t);

/// Converts any representation to any other of the same type. Bare form
/// exists only for type A.
AnyTableau convert(const AnyTableau& t, Repr target);
/// Standard form of any representation.
TableauA standard_a(const AnyTableau& t);
TableauB standard_b(const AnyTableau& t);

/// Grid drawing: one header line of column labels, then one line per row
/// starting with its label. Diagonal cells of type B alternative tableaux
/// are drawn as a backslash.
std::string render(const AnyTableau& t);

}  // namespace ptab
