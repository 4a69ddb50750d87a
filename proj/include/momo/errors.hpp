#pragma once

#include <stdexcept>
#include <string>

namespace momo {

// Base class for everything this library throws on bad data.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define MOMO_DEFINE_ERROR(Name)                                                \
  class Name : public Error {                                                  \
  public:                                                                      \
    using Error::Error;                                                        \
  }

MOMO_DEFINE_ERROR(NonWatertightMesh);
MOMO_DEFINE_ERROR(DegenerateMesh);
MOMO_DEFINE_ERROR(CyclicParents);
MOMO_DEFINE_ERROR(PartCountMismatch);
MOMO_DEFINE_ERROR(TooShort);
MOMO_DEFINE_ERROR(NonOrthonormal);
MOMO_DEFINE_ERROR(BadCutoff);
MOMO_DEFINE_ERROR(EmptyCorpus);
MOMO_DEFINE_ERROR(HeterogeneousCorpus);
MOMO_DEFINE_ERROR(LengthMismatch);
MOMO_DEFINE_ERROR(ShapeMismatch);
MOMO_DEFINE_ERROR(ZeroDisplacement);
MOMO_DEFINE_ERROR(BadConfig);
MOMO_DEFINE_ERROR(ParseError);

#undef MOMO_DEFINE_ERROR

}  // namespace momo
