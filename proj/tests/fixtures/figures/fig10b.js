const {username, email} = await prompt.get(['username', 'email']);
