"""Classification of necktie knots as mathematical knots."""
