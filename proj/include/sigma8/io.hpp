#pragma once

#include <string>
#include <variant>

#include "sigma8/forms.hpp"
#include "sigma8/grouprep.hpp"
#include "sigma8/spc.hpp"

namespace sigma8 {

enum class DocumentKind { form, enhanced_form, symmetric_complex, groupring_complex, representation };

std::string to_string(DocumentKind kind);

/// One parsed document; `value` holds the type named by `kind`.
struct Document {
  using Value = std::variant<IntMatrix, EnhancedForm, SymmetricComplex, GroupRingComplex, Representation>;
  DocumentKind kind = DocumentKind::form;
  Value value;

  template <class T>
  const T* get() const {
    return std::get_if<T>(&value);
  }
};

/// Errors: SyntaxError (1-based line and column), SchemaError (path such as
/// `symmetric_complex.phi[1][2]`), InvariantError (value fails validation).
Document parse_document(const std::string& text);
/// Canonical text; parse_document(emit(d)) reproduces d.
std::string emit(const Document& d);

Document make_document(IntMatrix form);
Document make_document(EnhancedForm form);
Document make_document(SymmetricComplex complex);
Document make_document(GroupRingComplex complex);
Document make_document(Representation rep);

}  // namespace sigma8
