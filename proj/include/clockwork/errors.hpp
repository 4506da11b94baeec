#ifndef CLOCKWORK_ERRORS_HPP
#define CLOCKWORK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace clockwork {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid or inconsistent input data (CLI exit code 3).
class DataError : public Error {
public:
    using Error::Error;
};

/// A numerical procedure failed to produce a usable result (CLI exit code 4).
class NumericalError : public Error {
public:
    using Error::Error;
};

#define CLOCKWORK_DEFINE_ERROR(NAME, BASE)                                     \
    class NAME : public BASE {                                                 \
    public:                                                                    \
        using BASE::BASE;                                                      \
        NAME() : BASE(#NAME) {}                                                \
    }

// markov
CLOCKWORK_DEFINE_ERROR(NegativeRate, DataError);
CLOCKWORK_DEFINE_ERROR(AbsorbingState, DataError);
CLOCKWORK_DEFINE_ERROR(Reducible, DataError);
CLOCKWORK_DEFINE_ERROR(DegenerateGenerator, DataError);

// signal
CLOCKWORK_DEFINE_ERROR(ConstantSignal, DataError);
CLOCKWORK_DEFINE_ERROR(FitDiverged, NumericalError);
CLOCKWORK_DEFINE_ERROR(AllZeroDensity, NumericalError);
CLOCKWORK_DEFINE_ERROR(LengthMismatch, DataError);

// ticks
CLOCKWORK_DEFINE_ERROR(ZeroRate, DataError);

// precision
CLOCKWORK_DEFINE_ERROR(TooShort, DataError);

// rate inference
CLOCKWORK_DEFINE_ERROR(TooFewSamples, DataError);
CLOCKWORK_DEFINE_ERROR(ZeroDenominator, NumericalError);
CLOCKWORK_DEFINE_ERROR(UnvisitedState, DataError);
CLOCKWORK_DEFINE_ERROR(WindowTooShort, DataError);

// fcs
CLOCKWORK_DEFINE_ERROR(ConvergenceFailure, NumericalError);
CLOCKWORK_DEFINE_ERROR(SingularMatrix, NumericalError);

// thermo
CLOCKWORK_DEFINE_ERROR(UnitMismatch, DataError);
CLOCKWORK_DEFINE_ERROR(NegativeDissipation, DataError);

// io / pipeline
CLOCKWORK_DEFINE_ERROR(MalformedRow, DataError);
CLOCKWORK_DEFINE_ERROR(NonUniformSampling, DataError);
CLOCKWORK_DEFINE_ERROR(EmptyTrace, DataError);
CLOCKWORK_DEFINE_ERROR(ConfigError, DataError);

#undef CLOCKWORK_DEFINE_ERROR

} // namespace clockwork

#endif
