/*! \file errors.hh
  \brief Exception types shared across modules.
*/

#ifndef WOM_ERRORS_HH
#define WOM_ERRORS_HH

#include <stdexcept>

namespace wom {

  //! Invalid generator or simulation parameters.
  class ParamError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
  };

} // namespace wom

#endif
