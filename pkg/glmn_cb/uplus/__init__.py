from glmn_cb.uplus.cb_uplus import *
from glmn_cb.uplus.cb_canonical import *
from glmn_cb.uplus.cb_pbw import *
