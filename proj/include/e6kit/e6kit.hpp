#pragma once

#include "e6kit/error.hpp"
#include "e6kit/scalar.hpp"
#include "e6kit/linalg.hpp"
#include "e6kit/cda.hpp"
#include "e6kit/albert.hpp"
#include "e6kit/linmap.hpp"
#include "e6kit/brown.hpp"
#include "e6kit/invol.hpp"
#include "e6kit/kac.hpp"
#include "e6kit/qclass.hpp"
#include "e6kit/serialize.hpp"
#include "e6kit/verify.hpp"
