namespace cubar {}
