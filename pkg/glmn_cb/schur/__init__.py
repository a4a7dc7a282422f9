from glmn_cb.schur.cb_schur import *
from glmn_cb.schur.cb_xi import *
from glmn_cb.schur.cb_stable import *
