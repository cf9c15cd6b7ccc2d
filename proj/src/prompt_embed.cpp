namespace tere {}
