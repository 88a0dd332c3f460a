#ifndef INFOPARITY_ERROR_H_
#define INFOPARITY_ERROR_H_

#include <stdexcept>
#include <string>

namespace infoparity {

// Raised for every precondition or input-validation failure in the library.
// The message names the offending value, node, file or flag.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace infoparity

#endif  // INFOPARITY_ERROR_H_
