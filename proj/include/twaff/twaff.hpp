#pragma once

#include "twaff/cartan.hpp"
#include "twaff/center.hpp"
#include "twaff/error.hpp"
#include "twaff/json_export.hpp"
#include "twaff/laurent.hpp"
#include "twaff/pbw.hpp"
#include "twaff/roots.hpp"
