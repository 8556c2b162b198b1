public class S039 extends State {
    public void open() {
        send("msg5");
        switch (event) {
            case EV0:
                switch (event) {
                    case EV1:
                        switch (event) {
                            case EV0:
                                send("msg6");
                                new S095();
                                update();
                                break;
                        }
                        switch (event) {
                            case EV2:
                                send("msg4");
                                new S024();
                                break;
                            case EV0:
                                send("msg6");
                                new S014();
                                send("msg3");
                                break;
                            case EV4:
                                update();
                                send("msg2");
                                send("msg7");
                                break;
                        }
                        break;
                    case EV5:
                        send("msg3");
                        break;
                    case EV3:
                        try {
                            send("msg3");
                            new S011();
                            new S051();
                        } catch (TimeoutException e) {
                            send("msg2");
                            log("trace");
                            send("msg6");
                        }
                        break;
                    default:
                        if (counter > 1) {
                            send("msg3");
                            send("msg2");
                        } else {
                            update();
                            update();
                        }
                        new S093();
                        break;
                }
                try {
                    new S027();
                    if (counter > 6) {
                        new S067();
                        log("trace");
                    }
                    try {
                        log("trace");
                        new S054();
                    } catch (IOException e) {
                        update();
                        send("msg7");
                        new S049();
                    } finally {
                        new S083();
                        send("msg0");
                    }
                } catch (IOException e) {
                    new S094();
                }
                new S051();
                break;
        }
    }

    public void close() {
        send("msg5");
        switch (event) {
            case EV1:
                switch (event) {
                    case EV4:
                        send("msg7");
                        switch (event) {
                            case EV3:
                                send("msg7");
                                new S083();
                                send("msg6");
                                break;
                            case EV5:
                                send("msg1");
                                break;
                            case EV1:
                                send("msg5");
                                break;
                        }
                        break;
                    case EV5:
                        new S019();
                        send("msg6");
                        break;
                    case EV3:
                        new S028();
                        break;
                }
                switch (event) {
                    case EV1:
                        log("trace");
                        log("trace");
                        break;
                }
                new S073();
                break;
            case EV3:
                try {
                    if (counter > 9) {
                        send("msg0");
                        send("msg2");
                        new S036();
                    } else {
                        new S016();
                        send("msg0");
                    }
                    new S094();
                    send("msg7");
                } catch (TimeoutException e) {
                    new S010();
                } catch (IOException e) {
                    try {
                        update();
                    } finally {
                        update();
                        send("msg7");
                    }
                    send("msg4");
                } finally {
                    new S041();
                    send("msg1");
                }
                try {
                    if (counter > 9) {
                        new S075();
                        update();
                    } else {
                        update();
                        send("msg6");
                        log("trace");
                    }
                } finally {
                    if (counter > 4) {
                        send("msg2");
                        new S052();
                    }
                    if (counter > 1) {
                        new S096();
                    }
                    update();
                }
                break;
        }
        send("msg4");
    }

    public void start() {
        send("msg5");
        if (counter > 8) {
            send("msg1");
            send("msg2");
            new S048();
        } else {
            new S072();
            new S057();
        }
        update();
    }

    public void stop() {
        new S007();
        switch (event) {
            case EV2:
                new S098();
                new S058();
                new S067();
                break;
            case EV5:
                if (counter > 1) {
                    try {
                        send("msg0");
                    } catch (TimeoutException e) {
                        new S058();
                    }
                    update();
                    new S082();
                } else {
                    try {
                        send("msg7");
                    } catch (TimeoutException e) {
                        new S089();
                        send("msg4");
                    } catch (IOException e) {
                        log("trace");
                        send("msg2");
                    }
                }
                break;
        }
        new S056();
    }

    public void tick() {
        send("msg0");
        try {
            new S064();
        } catch (TimeoutException e) {
            new S004();
            new S010();
        } catch (IllegalStateException e) {
            if (counter > 9) {
                try {
                    send("msg0");
                    send("msg0");
                } finally {
                    new S054();
                }
            }
            send("msg5");
        }
    }

    public void reset() {
        new S007();
    }

    public void pause() {
        new S068();
        if (counter > 2) {
            log("trace");
        } else {
            try {
                send("msg6");
                update();
                new S098();
            } finally {
                send("msg6");
            }
        }
    }

    public void resume() {
        new S012();
    }

    public void load() {
        try {
            new S048();
            new Abstract1();
        } catch (IllegalStateException e) {
            new S029();
        } catch (IOException e) {
            send("msg3");
            new S085();
            new S014();
        } finally {
            send("msg3");
        }
        new S042();
        update();
    }

    public void save() {
        new Abstract24();
    }
}
