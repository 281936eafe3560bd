#pragma once

namespace sip::reftables {

// Reference tables typed in by hand from the standard constructions.
inline constexpr const char* kSD16 = R"(GROUP SD16 ORDER 16
CLASS 1a REPORDER 1 SIZE 1 POW 2=1a
CLASS 2a REPORDER 2 SIZE 1 POW 2=1a
CLASS 2b REPORDER 2 SIZE 4 POW 2=1a
CLASS 4a REPORDER 4 SIZE 2 POW 2=2a
CLASS 4b REPORDER 4 SIZE 4 POW 2=2a
CLASS 8a REPORDER 8 SIZE 2 POW 2=4a
CLASS 8b REPORDER 8 SIZE 2 POW 2=4a
CHAR X.1 VALUES 1 ; 1 ; 1 ; 1 ; 1 ; 1 ; 1
CHAR X.2 VALUES 1 ; 1 ; -1 ; 1 ; -1 ; 1 ; 1
CHAR X.3 VALUES 1 ; 1 ; 1 ; 1 ; -1 ; -1 ; -1
CHAR X.4 VALUES 1 ; 1 ; -1 ; 1 ; 1 ; -1 ; -1
CHAR X.5 VALUES 2 ; 2 ; 0 ; -2 ; 0 ; 0 ; 0
CHAR X.6 VALUES 2 ; -2 ; 0 ; 0 ; 0 ; E(8)+E(8)^3 ; -E(8)-E(8)^3
CHAR X.7 VALUES 2 ; -2 ; 0 ; 0 ; 0 ; -E(8)-E(8)^3 ; E(8)+E(8)^3
)";

inline constexpr const char* kS4 = R"(GROUP S4 ORDER 24
CLASS 1a REPORDER 1 SIZE 1 POW 2=1a
CLASS 2a REPORDER 2 SIZE 3 POW 2=1a
CLASS 2b REPORDER 2 SIZE 6 POW 2=1a
CLASS 3a REPORDER 3 SIZE 8 POW 3=1a
CLASS 4a REPORDER 4 SIZE 6 POW 2=2a
CHAR X.1 REAL VALUES 1 ; 1 ; 1 ; 1 ; 1
CHAR X.2 REAL VALUES 1 ; 1 ; -1 ; 1 ; -1
CHAR X.3 REAL VALUES 2 ; 2 ; 0 ; -1 ; 0
CHAR X.4 REAL VALUES 3 ; -1 ; 1 ; 0 ; -1
CHAR X.5 REAL VALUES 3 ; -1 ; -1 ; 0 ; 1
)";

inline constexpr const char* kA5 = R"(GROUP A5 ORDER 60
CLASS 1a REPORDER 1 SIZE 1
CLASS 2a REPORDER 2 SIZE 15 POW 2=1a
CLASS 3a REPORDER 3 SIZE 20 POW 3=1a
CLASS 5a REPORDER 5 SIZE 12 POW 5=1a
CLASS 5b REPORDER 5 SIZE 12 POW 5=1a
CHAR X.1 VALUES 1 ; 1 ; 1 ; 1 ; 1
CHAR X.2 VALUES 3 ; -1 ; 0 ; -E(5)^2-E(5)^3 ; -E(5)-E(5)^4
CHAR X.3 VALUES 3 ; -1 ; 0 ; -E(5)-E(5)^4 ; -E(5)^2-E(5)^3
CHAR X.4 VALUES 4 ; 0 ; 1 ; -1 ; -1
CHAR X.5 VALUES 5 ; 1 ; -1 ; 0 ; 0
)";

}  // namespace sip::reftables
