var words = s.split(" ");
